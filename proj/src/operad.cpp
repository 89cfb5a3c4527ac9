#include "ea/operad.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace ea::op {

Perm perm_identity(int r) {
    Perm p(r);
    for (int i = 0; i < r; ++i) p[i] = (std::uint8_t)i;
    return p;
}

Perm perm_tau() { return Perm{1, 0}; }

Perm perm_mul(const Perm& a, const Perm& b) {
    Perm c(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) c[i] = a[b[i]];
    return c;
}

Perm perm_inverse(const Perm& p) {
    Perm q(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) q[p[i]] = (std::uint8_t)i;
    return q;
}

bool PermTuple::nondegenerate() const {
    for (std::size_t i = 0; i + 1 < word.size(); ++i)
        if (word[i] == word[i + 1]) return false;
    return true;
}

void OperadElement::toggle(const PermTuple& t) {
    if (!t.nondegenerate()) return;
    auto it = terms.find(t);
    if (it == terms.end()) terms.insert(t);
    else terms.erase(it);
}

OperadElement make_element(int r, std::vector<PermTuple> ts, bool suspended) {
    OperadElement e;
    e.r = r;
    e.suspended = suspended;
    for (auto& t : ts) e.toggle(t);
    return e;
}

OperadElement theta(int d) {
    PermTuple t;
    t.r = 2;
    for (int i = 0; i <= d; ++i)
        t.word.push_back(i % 2 ? perm_tau() : perm_identity(2));
    return make_element(2, {t});
}

OperadElement tau_theta(int d) { return act(perm_tau(), theta(d)); }

OperadElement operad_unit() {
    PermTuple t;
    t.r = 1;
    t.word.push_back(perm_identity(1));
    return make_element(1, {t});
}

OperadElement eta() {
    PermTuple t;
    t.r = 0;
    t.word.push_back(Perm{});
    return make_element(0, {t});
}

OperadElement differential(const OperadElement& e) {
    OperadElement out;
    out.r = e.r;
    out.suspended = e.suspended;
    for (const PermTuple& t : e.terms) {
        int d = t.degree();
        if (d == 0) continue;
        for (int i = 0; i <= d; ++i) {
            PermTuple f;
            f.r = t.r;
            f.word.reserve(d);
            for (int k = 0; k <= d; ++k)
                if (k != i) f.word.push_back(t.word[k]);
            out.toggle(f);
        }
    }
    return out;
}

static OperadElement map_entries(const OperadElement& e, const Perm& w, bool on_right) {
    if ((int)w.size() != e.r)
        throw std::invalid_argument("act: permutation arity mismatch");
    OperadElement out;
    out.r = e.r;
    out.suspended = e.suspended;
    for (const PermTuple& t : e.terms) {
        PermTuple s;
        s.r = t.r;
        s.word.reserve(t.word.size());
        for (const Perm& p : t.word)
            s.word.push_back(on_right ? perm_mul(p, w) : perm_mul(w, p));
        out.toggle(s);
    }
    return out;
}

OperadElement act(const Perm& w, const OperadElement& e) {
    return map_entries(e, perm_inverse(w), true);
}

OperadElement act_right(const Perm& w, const OperadElement& e) {
    return map_entries(e, w, true);
}

std::set<std::pair<PermTuple, PermTuple>> diagonal(const OperadElement& e) {
    std::set<std::pair<PermTuple, PermTuple>> out;
    for (const PermTuple& t : e.terms) {
        int d = t.degree();
        for (int k = 0; k <= d; ++k) {
            PermTuple a, b;
            a.r = b.r = t.r;
            a.word.assign(t.word.begin(), t.word.begin() + k + 1);
            b.word.assign(t.word.begin() + k, t.word.end());
            if (!a.nondegenerate() || !b.nondegenerate()) continue;
            auto key = std::make_pair(a, b);
            auto it = out.find(key);
            if (it == out.end()) out.insert(key);
            else out.erase(it);
        }
    }
    return out;
}

Perm perm_substitute(const Perm& w, const std::vector<Perm>& us) {
    int r = (int)w.size();
    if ((int)us.size() != r)
        throw std::invalid_argument("perm_substitute: factor count mismatch");
    std::vector<int> sizes(r), src_off(r, 0), tgt_off(r, 0);
    int total = 0;
    for (int i = 0; i < r; ++i) {
        sizes[i] = (int)us[i].size();
        src_off[i] = total;
        total += sizes[i];
    }
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            if (w[j] < w[i]) tgt_off[i] += sizes[j];
    Perm q(total);
    for (int i = 0; i < r; ++i)
        for (int p = 0; p < sizes[i]; ++p)
            q[src_off[i] + p] = (std::uint8_t)(tgt_off[i] + us[i][p]);
    return q;
}

Perm block_perm(const Perm& w, const std::vector<int>& sizes) {
    std::vector<Perm> ids;
    ids.reserve(sizes.size());
    for (int s : sizes) ids.push_back(perm_identity(s));
    return perm_substitute(w, ids);
}

OperadElement compose(const OperadElement& rho, const std::vector<OperadElement>& sigma) {
    if ((int)sigma.size() != rho.r)
        throw std::invalid_argument("compose: arity mismatch");
    int r = rho.r;
    int s_total = 0;
    for (const auto& s : sigma) s_total += s.r;

    OperadElement out;
    out.r = s_total;
    out.suspended = rho.suspended;

    // choose one basis term per factor, then sum over all monotone lattice
    // paths through the (r+1)-dimensional degree grid
    std::vector<const PermTuple*> pick(r, nullptr);
    auto emit = [&](const PermTuple& t) {
        std::vector<int> maxpos(r + 1);
        maxpos[0] = t.degree();
        int n = t.degree();
        for (int i = 0; i < r; ++i) {
            maxpos[i + 1] = pick[i]->degree();
            n += pick[i]->degree();
        }
        std::vector<int> pos(r + 1, 0);
        PermTuple cur;
        cur.r = s_total;
        cur.word.resize(n + 1);
        std::vector<Perm> us(r);
        auto level = [&]() {
            for (int i = 0; i < r; ++i) us[i] = pick[i]->word[pos[i + 1]];
            return perm_substitute(t.word[pos[0]], us);
        };
        auto rec = [&](auto&& self, int step) -> void {
            cur.word[step] = level();
            if (step == n) {
                out.toggle(cur);
                return;
            }
            for (int c = 0; c <= r; ++c) {
                if (pos[c] < maxpos[c]) {
                    ++pos[c];
                    self(self, step + 1);
                    --pos[c];
                }
            }
        };
        rec(rec, 0);
    };
    auto loop = [&](auto&& self, int i, const PermTuple& t) -> void {
        if (i == r) {
            emit(t);
            return;
        }
        for (const PermTuple& u : sigma[i].terms) {
            pick[i] = &u;
            self(self, i + 1, t);
        }
    };
    for (const PermTuple& t : rho.terms) loop(loop, 0, t);
    return out;
}

OperadElement partial_compose(const OperadElement& rho, int slot, const OperadElement& sigma) {
    if (slot < 1 || slot > rho.r)
        throw std::invalid_argument("partial_compose: slot out of range");
    std::vector<OperadElement> args(rho.r, operad_unit());
    args[slot - 1] = sigma;
    return compose(rho, args);
}

bool epsilon(const PermTuple& t) {
    // The usual description reads off the first column w_k(1).  Our one-line
    // encoding of substituted permutations is inverse to that convention
    // (pinned by the unit law of compose), so the first column here is the
    // preimage of 1.
    int r = t.r;
    if (t.degree() != r - 1) return false;
    std::vector<bool> seen(r, false);
    for (const Perm& p : t.word) {
        int v = (int)(std::find(p.begin(), p.end(), 0) - p.begin());
        if (seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

OperadElement cap_epsilon(const OperadElement& e) {
    OperadElement out;
    out.r = e.r;
    out.suspended = true;
    int r = e.r;
    for (const PermTuple& t : e.terms) {
        int d = t.degree();
        if (d < r - 1) continue;
        PermTuple pre;
        pre.r = r;
        pre.word.assign(t.word.begin(), t.word.begin() + r);
        if (!pre.nondegenerate() || !epsilon(pre)) continue;
        PermTuple suf;
        suf.r = r;
        suf.word.assign(t.word.begin() + r - 1, t.word.end());
        out.toggle(suf);
    }
    return out;
}

unsigned long long basis_count(int r, int d) {
    unsigned long long f = 1;
    for (int i = 2; i <= r; ++i) f *= (unsigned long long)i;
    unsigned long long c = f;
    for (int i = 0; i < d; ++i) c *= (f - 1);
    return c;
}

void for_each_basis(int r, int d, const std::function<void(const PermTuple&)>& fn) {
    std::vector<Perm> perms;
    Perm p = perm_identity(r);
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));

    PermTuple cur;
    cur.r = r;
    cur.word.resize(d + 1);
    auto rec = [&](auto&& self, int k) -> void {
        if (k == d + 1) {
            fn(cur);
            return;
        }
        for (const Perm& q : perms) {
            if (k > 0 && cur.word[k - 1] == q) continue;
            cur.word[k] = q;
            self(self, k + 1);
        }
    };
    rec(rec, 0);
}

std::vector<PermTuple> enumerate_basis(int r, int d) {
    std::vector<PermTuple> out;
    for_each_basis(r, d, [&](const PermTuple& t) { out.push_back(t); });
    return out;
}

std::string to_text(const PermTuple& t) {
    std::ostringstream os;
    for (std::size_t k = 0; k < t.word.size(); ++k) {
        if (k) os << '|';
        const Perm& p = t.word[k];
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (i && t.r > 9) os << ' ';
            os << (int)(p[i] + 1);
        }
    }
    return os.str();
}

std::string to_text(const OperadElement& e) {
    if (e.terms.empty()) return "0";
    std::string s;
    for (const PermTuple& t : e.terms) {
        if (!s.empty()) s += "+";
        s += to_text(t);
    }
    return s;
}

static std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

static Perm perm_from_text(const std::string& s, int r) {
    Perm p;
    if (s.find(' ') != std::string::npos) {
        std::istringstream is(s);
        int v;
        while (is >> v) p.push_back((std::uint8_t)(v - 1));
    } else {
        for (char c : s) {
            if (c < '1' || c > '9')
                throw std::invalid_argument("bad permutation text: " + s);
            p.push_back((std::uint8_t)(c - '1'));
        }
    }
    Perm chk = p;
    std::sort(chk.begin(), chk.end());
    if ((int)p.size() != r || chk != perm_identity(r))
        throw std::invalid_argument("not a permutation of the stated arity: " + s);
    return p;
}

PermTuple tuple_from_text(const std::string& s, int r) {
    PermTuple t;
    t.r = r;
    std::string part;
    std::istringstream is(s);
    while (std::getline(is, part, '|'))
        t.word.push_back(perm_from_text(trim(part), r));
    if (t.word.empty())
        throw std::invalid_argument("empty tuple text");
    return t;
}

OperadElement element_from_text(const std::string& s, int r) {
    OperadElement e;
    e.r = r;
    std::string str = trim(s);
    if (str == "0") return e;
    std::string part;
    std::istringstream is(str);
    while (std::getline(is, part, '+'))
        e.toggle(tuple_from_text(trim(part), r));
    return e;
}

namespace {

// d^2 = 0 check over id-encoded words: the faces of faces of a word must
// cancel in pairs after dropping degenerates.  Only adjacency of ids matters.
bool d2_ok_word(const std::uint8_t* w, int len) {
    int d = len - 1;
    std::array<std::uint64_t, 64> acc;
    int acc_n = 0;
    for (int i = 0; i <= d; ++i) {
        if (i > 0 && i < d && w[i - 1] == w[i + 1]) continue;  // degenerate face
        // face entries: w without position i
        for (int j = 0; j <= d - 1; ++j) {
            int jo = j < i ? j : j + 1;  // original index dropped second
            if (j > 0 && j < d - 1) {
                int lo = (j - 1) < i ? (j - 1) : j;
                int hi = (j + 1) < i ? (j + 1) : j + 2;
                if (w[lo] == w[hi]) continue;  // degenerate second face
            }
            std::uint64_t code = 0;
            for (int k = 0; k <= d; ++k) {
                if (k == i || k == jo) continue;
                code = (code << 8) | w[k];
            }
            acc[acc_n++] = code;
        }
    }
    std::sort(acc.begin(), acc.begin() + acc_n);
    for (int k = 0; k < acc_n; k += 2) {
        if (k + 1 >= acc_n || acc[k] != acc[k + 1]) return false;
    }
    return true;
}

bool d2_check_arity(int r, int d_max) {
    unsigned long long fact = 1;
    for (int i = 2; i <= r; ++i) fact *= (unsigned long long)i;
    int P = (int)fact;

    std::atomic<int> next{0};
    std::atomic<bool> ok{true};
    int nthreads = std::min((unsigned)P, std::max(1u, std::thread::hardware_concurrency()));
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t) {
        pool.emplace_back([&]() {
            std::array<std::uint8_t, 8> w{};
            for (;;) {
                int first = next.fetch_add(1);
                if (first >= P || !ok.load()) break;
                w[0] = (std::uint8_t)first;
                // enumerate words of each length 3..d_max+1 starting at `first`
                for (int d = 2; d <= d_max; ++d) {
                    int len = d + 1;
                    auto rec = [&](auto&& self, int k) -> void {
                        if (!ok.load()) return;
                        if (k == len) {
                            if (!d2_ok_word(w.data(), len)) ok.store(false);
                            return;
                        }
                        for (int id = 0; id < P; ++id) {
                            if (id == w[k - 1]) continue;
                            w[k] = (std::uint8_t)id;
                            self(self, k + 1);
                        }
                    };
                    rec(rec, 1);
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    return ok.load();
}

} // namespace

bool check_d_squared_all(int r_max, int d_max) {
    for (int r = 1; r <= r_max; ++r)
        if (!d2_check_arity(r, d_max)) return false;
    return true;
}

} // namespace ea::op
