#include "CLI11.hpp"
#include "json.hpp"

#include "ea/acceptance.hpp"
#include "ea/coaction.hpp"
#include "ea/division.hpp"
#include "ea/free_algebra.hpp"
#include "ea/simplicial.hpp"
#include "ea/steenrod.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

namespace op = ea::op;
namespace fa = ea::fa;
namespace coa = ea::coa;
namespace dv = ea::dv;
namespace simp = ea::simp;
namespace st = ea::st;
namespace gf2 = ea::gf2;
using json = nlohmann::ordered_json;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

// "simplex:3", "boundary:2", "sphere:2", "nerve_z2:8", "point", "interval",
// "circle", "product:<a>,<b>", or a .json file
simp::SimplicialSet parse_space(const std::string& spec) {
    if (spec.size() > 5 && spec.substr(spec.size() - 5) == ".json")
        return simp::from_json(slurp(spec));
    if (spec == "point") return simp::standard_simplex(0);
    if (spec == "interval") return simp::standard_simplex(1);
    if (spec == "circle") return simp::sphere(1);
    auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw CLI::ValidationError("bad space spec: " + spec);
    std::string kind = spec.substr(0, colon), arg = spec.substr(colon + 1);
    if (kind == "product") {
        auto comma = arg.rfind(',');
        if (comma == std::string::npos)
            throw CLI::ValidationError("product wants two specs: " + spec);
        return simp::product(parse_space(arg.substr(0, comma)),
                             parse_space(arg.substr(comma + 1)))
            .space;
    }
    int n = std::stoi(arg);
    if (kind == "simplex") return simp::standard_simplex(n);
    if (kind == "boundary") return simp::boundary_simplex(n);
    if (kind == "sphere") return simp::sphere(n);
    if (kind == "nerve_z2") return simp::nerve_z2(n);
    throw CLI::ValidationError("unknown space kind: " + kind);
}

// "em:3" or a presentation .json file
fa::AlmostFreeAlgebra parse_model(const std::string& spec) {
    if (spec.size() > 5 && spec.substr(spec.size() - 5) == ".json")
        return fa::algebra_from_json(slurp(spec));
    if (spec.rfind("em:", 0) == 0) return fa::mandell_model(std::stoi(spec.substr(3)));
    throw CLI::ValidationError("bad model spec: " + spec);
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(out_path);
    out << text;
    if (!text.empty() && text.back() != '\n') out << '\n';
}

// degree -> dim rows in the chosen format
std::string series_text(const std::vector<std::pair<int, int>>& rows,
                        const std::string& format) {
    if (format == "csv") {
        std::ostringstream os;
        os << "degree,dim\n";
        for (auto [d, k] : rows) os << d << "," << k << "\n";
        return os.str();
    }
    json j = json::array();
    for (auto [d, k] : rows) j.push_back({{"degree", d}, {"dim", k}});
    return j.dump(2);
}

std::string bits(const gf2::BitVec& v) {
    std::string s(v.size(), '0');
    for (int i = 0; i < v.size(); ++i)
        if (v.get(i)) s[i] = '1';
    return s;
}

json coch_json(const coa::Coch& u) {
    json j = json::array();
    for (auto [d, id] : u) j.push_back({d, id});
    return j;
}

json tens2_json(const coa::Tens2& u) {
    json j = json::array();
    for (const auto& [a, b] : u)
        j.push_back({{a.first, a.second}, {b.first, b.second}});
    return j;
}

std::string slug(const std::string& name) {
    std::string s;
    for (char c : name) {
        if (std::isalnum((unsigned char)c)) s += (char)std::tolower((unsigned char)c);
        else if (!s.empty() && s.back() != '-') s += '-';
    }
    while (!s.empty() && s.back() == '-') s.pop_back();
    return s;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"chain-level operations over the mod-2 Barratt-Eccles operad"};
    app.require_subcommand(1);

    std::string space_spec, model_spec, format = "json", out_path, monomial;
    int n = 2, max_degree = 8, arity_cap = 2, opdeg_cap = 8, length_cap = 3;
    unsigned seed = 0;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "json or csv")
            ->check(CLI::IsMember({"json", "csv"}));
        cmd->add_option("--out", out_path, "write the report to a file");
    };

    CLI::App* c_space = app.add_subcommand("space", "construct a simplicial set");
    c_space->add_option("--space", space_spec)->required();
    add_common(c_space);

    CLI::App* c_hom = app.add_subcommand("homology", "mod-2 homology dimensions");
    c_hom->add_option("--space", space_spec)->required();
    c_hom->add_option("--max-degree", max_degree);
    add_common(c_hom);

    CLI::App* c_sq = app.add_subcommand("sq", "Steenrod squares on cohomology");
    c_sq->add_option("--space", space_spec)->required();
    c_sq->add_option("--max-degree", max_degree);
    add_common(c_sq);

    CLI::App* c_adem = app.add_subcommand("adem", "admissible expansion of a monomial");
    c_adem->add_option("monomial", monomial, "e.g. \"Sq2 Sq2\" or \"Sq-1 Sq0\"")
        ->required();
    add_common(c_adem);

    CLI::App* c_em = app.add_subcommand("em-model", "Eilenberg-MacLane presentation");
    c_em->add_option("--n", n)->required();
    add_common(c_em);

    CLI::App* c_div = app.add_subcommand("divide", "divide a model by chains of a space");
    c_div->add_option("--model", model_spec)->required();
    c_div->add_option("--space", space_spec)->required();
    add_common(c_div);

    CLI::App* c_loop = app.add_subcommand("loop", "loop model of a presentation");
    c_loop->add_option("--model", model_spec)->required();
    add_common(c_loop);

    CLI::App* c_map = app.add_subcommand("mapping-space",
                                         "series of the mapping space into K(Z/2,n)");
    c_map->add_option("--space", space_spec)->required();
    c_map->add_option("--n", n)->required();
    c_map->add_option("--max-degree", max_degree);
    add_common(c_map);

    CLI::App* c_shuf = app.add_subcommand("shuffle-witness",
                                          "cup-i failure of the shuffle map");
    c_shuf->add_option("--max-degree", max_degree);
    add_common(c_shuf);

    CLI::App* c_verify = app.add_subcommand("verify", "run the acceptance suite");
    c_verify->add_option("--seed", seed);
    add_common(c_verify);

    // unused by the current commands but part of the stable surface
    app.add_option("--arity-cap", arity_cap)->check(CLI::PositiveNumber);
    app.add_option("--opdeg-cap", opdeg_cap)->check(CLI::PositiveNumber);
    app.add_option("--length-cap", length_cap)->check(CLI::PositiveNumber);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*c_space) {
            simp::SimplicialSet x = parse_space(space_spec);
            if (format == "csv") {
                std::vector<std::pair<int, int>> rows;
                for (int d = 0; d <= x.top_dim; ++d) rows.push_back({d, x.count(d)});
                std::string text = series_text(rows, "csv");
                emit("dim,count\n" + text.substr(text.find('\n') + 1), out_path);
            } else {
                emit(simp::to_json(x), out_path);
            }
        } else if (*c_hom) {
            simp::SimplicialSet x = parse_space(space_spec);
            int hi = std::min(max_degree, x.top_dim);
            std::vector<std::pair<int, int>> rows;
            for (const simp::GradedPiece& p : simp::homology(x, 0, hi))
                rows.push_back({p.degree, p.dim});
            for (int d = hi + 1; d <= max_degree; ++d) rows.push_back({d, 0});
            emit(series_text(rows, format), out_path);
        } else if (*c_sq) {
            simp::SimplicialSet x = parse_space(space_spec);
            st::Cohomology h(x);
            json entries = json::array();
            std::ostringstream csv;
            csv << "i,degree,index,result\n";
            for (int j = 0; j <= std::min(max_degree, h.top()); ++j)
                for (int k = 0; k < h.dim(j); ++k)
                    for (int i = 0; i + j <= std::min(max_degree, h.top()); ++i) {
                        st::CohClass c =
                            st::sq_on_cohomology(h, i, h.basis_class(j, k));
                        entries.push_back(json{{"i", i},
                                               {"degree", j},
                                               {"index", k},
                                               {"result", bits(c.coeffs)}});
                        csv << i << "," << j << "," << k << "," << bits(c.coeffs)
                            << "\n";
                    }
            emit(format == "csv" ? csv.str() : entries.dump(2), out_path);
        } else if (*c_adem) {
            st::SqMonomial m = st::monomial_from_text(monomial);
            st::BigSteenrodElement big = st::adem_normalize(m);
            json j{{"input", st::to_text(m)},
                   {"normalized", st::to_text(big)},
                   {"classical", st::to_text(st::project_to_classical(big))}};
            emit(j.dump(2), out_path);
        } else if (*c_em) {
            emit(fa::to_json(fa::mandell_model(n)), out_path);
        } else if (*c_div) {
            fa::AlmostFreeAlgebra f = parse_model(model_spec);
            simp::SimplicialSet x = parse_space(space_spec);
            coa::SimplicialHandle k(x, false);
            dv::Division d = dv::divide_almost_free(f, k);
            emit(fa::to_json(d.algebra), out_path);
        } else if (*c_loop) {
            fa::AlmostFreeAlgebra l = dv::loop_model(parse_model(model_spec));
            emit(fa::to_json(l), out_path);
        } else if (*c_map) {
            simp::SimplicialSet x = parse_space(space_spec);
            std::vector<int> dims = st::mapping_space_series(x, n, max_degree);
            std::vector<std::pair<int, int>> rows;
            for (int d = 0; d < (int)dims.size(); ++d) rows.push_back({d, dims[d]});
            emit(series_text(rows, format), out_path);
        } else if (*c_shuf) {
            simp::SimplicialSet d1 = simp::standard_simplex(1);
            simp::Product pr = simp::product(d1, d1);
            auto w = coa::shuffle_witness(pr, d1, d1, 1, std::min(max_degree, 2));
            if (!w) {
                emit(json{{"found", false}}.dump(2), out_path);
                return 1;
            }
            json j{{"found", true},
                   {"i", w->i},
                   {"u", coch_json(w->u)},
                   {"v", coch_json(w->v)},
                   {"through_shuffle", tens2_json(w->through_shuffle)},
                   {"in_tensor", tens2_json(w->in_tensor)}};
            emit(j.dump(2), out_path);
        } else if (*c_verify) {
            std::vector<ea::acc::ItemResult> results = ea::acc::run_acceptance(
                seed, [](const ea::acc::ItemResult& r) {
                    std::cerr << "[" << (r.passed ? "PASS" : "FAIL") << "] " << r.name
                              << "\n";
                });
            std::vector<std::pair<std::string, const ea::acc::ItemResult*>> named;
            for (const auto& r : results) {
                char num[8];
                std::snprintf(num, sizeof num, "%02d", r.number);
                named.push_back({std::string(num) + "-" + slug(r.name), &r});
            }
            std::sort(named.begin(), named.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            int failed = 0;
            if (format == "csv") {
                std::ostringstream os;
                os << "item,status,details\n";
                for (const auto& [name, r] : named) {
                    os << name << "," << (r->passed ? "pass" : "fail") << ",\""
                       << r->details << "\"\n";
                    failed += !r->passed;
                }
                emit(os.str(), out_path);
            } else {
                json j = json::array();
                for (const auto& [name, r] : named) {
                    json e{{"item", name},
                           {"status", r->passed ? "pass" : "fail"},
                           {"details", r->details}};
                    if (!r->passed) e["witness"] = r->details;
                    j.push_back(e);
                    failed += !r->passed;
                }
                emit(j.dump(2), out_path);
            }
            return failed ? 1 : 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
