// ordmatch: pattern algebra, clique extraction, exact oracles, extremal
// constructions and random experiments for ordered uniform matchings.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ordmatch/constructions.hpp"
#include "ordmatch/extract.hpp"
#include "ordmatch/json_io.hpp"
#include "ordmatch/oracle.hpp"
#include "ordmatch/pattern_algebra.hpp"
#include "ordmatch/sampling.hpp"
#include "ordmatch/verify.hpp"

namespace om = ordmatch;
using om::Json;

namespace {

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

long long env_guard(const char* name, long long fallback) {
    const char* v = std::getenv(name);
    return v ? std::atoll(v) : fallback;
}

std::vector<std::string> split_list(const std::string& csv) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : csv) {
        if (c == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

void emit(const Json& j) { std::cout << j.dump() << "\n"; }

int cmd_patterns(int r, bool collectable_only, bool partite_only, bool bb_only, bool atlas,
                 const std::string& format) {
    if (atlas || format == "csv") {
        auto rows = om::pattern_atlas(r);
        if (format == "csv") {
            std::cout << "word,collectable,split,maturity,dec_left,dec_right,big_brother,index\n";
            for (const auto& row : rows) {
                if (collectable_only && !row.collectable) continue;
                if (bb_only && !row.big_brother) continue;
                if (partite_only && !om::is_r_partite(om::Pattern::from_word(row.word))) continue;
                std::cout << row.word << ',' << (row.collectable ? 1 : 0) << ','
                          << row.split_blocks << ',' << row.maturity << ',' << row.dec_left
                          << ',' << row.dec_right << ',' << (row.big_brother ? 1 : 0) << ','
                          << row.index << "\n";
            }
            return 0;
        }
        Json out = Json::array();
        for (const auto& row : rows) {
            if (collectable_only && !row.collectable) continue;
            if (bb_only && !row.big_brother) continue;
            if (partite_only && !om::is_r_partite(om::Pattern::from_word(row.word))) continue;
            out.push_back(Json{{"word", row.word},
                               {"collectable", row.collectable},
                               {"split", row.split_blocks},
                               {"maturity", row.maturity},
                               {"dec", {row.dec_left, row.dec_right}},
                               {"big_brother", row.big_brother},
                               {"index", row.index}});
        }
        emit(out);
        return 0;
    }
    Json out = Json::array();
    if (bb_only) {
        for (const auto& p : om::big_brothers(r)) out.push_back(p.word());
    } else if (collectable_only) {
        for (const auto& p : om::collectable_index(r).table) out.push_back(p.word());
    } else {
        for (const auto& p : om::enumerate_patterns(r)) {
            if (partite_only && !om::is_r_partite(p)) continue;
            out.push_back(p.word());
        }
    }
    emit(out);
    return 0;
}

int cmd_analyze(const std::string& input, const std::string& pattern, bool all, bool with_census) {
    om::Matching m = om::matching_from_text(slurp(input));
    int guard = static_cast<int>(env_guard("ORDMATCH_GUARD_CLIQUE", om::kDefaultCliqueGuard));
    Json out;
    if (!pattern.empty()) {
        om::CliqueCertificate best = om::max_clique(m, om::Pattern::from_word(pattern), guard);
        out = om::to_json(best);
    } else if (all) {
        Json maxima = Json::array();
        for (const auto& p : om::enumerate_patterns(m.uniformity()))
            maxima.push_back(om::to_json(om::max_clique(m, p, guard)));
        out["maxima"] = maxima;
    } else {
        out["line"] = om::to_json(om::max_line_fast(m));
        if (m.uniformity() == 2) {
            auto sw = om::max_stack_wave_fast(m);
            out["stack"] = om::to_json(sw.stack);
            out["wave"] = om::to_json(sw.wave);
        }
    }
    if (with_census) {
        Json cj = Json::object();
        for (auto& [p, cnt] : om::census(m)) cj[p.word()] = cnt;
        out["census"] = cj;
        out["clean"] = om::is_clean(m);
    }
    emit(out);
    return 0;
}

int cmd_extract(const std::string& input, const std::string& params, bool clean, bool improved3) {
    om::Matching m = om::matching_from_text(slurp(input));
    std::vector<std::string> parts = split_list(params);
    om::ExtractionResult res;
    if (improved3) {
        std::vector<long long> a;
        for (auto& s : parts) a.push_back(std::stoll(s));
        res = om::extract3_improved(m, a);
    } else if (clean) {
        std::vector<long long> a;
        for (auto& s : parts) a.push_back(std::stoll(s));
        res = om::extract_clean(m, a);
    } else {
        std::vector<om::Rational> xs;
        for (auto& s : parts) xs.push_back(om::parse_rational(s));
        res = om::extract_clique(m, om::ParamVector::of(m.uniformity(), xs));
    }
    emit(om::to_json(res));
    return 0;
}

int cmd_enumerate(int r, int n, const std::string& property, bool count_only) {
    long long guard = env_guard("ORDMATCH_GUARD_ENUM", om::kDefaultEnumGuard);
    if (count_only) {
        emit(Json{{"count", om::alpha(r, n).str()}});
        return 0;
    }
    if (property.empty()) {
        Json out = Json::array();
        om::for_each_matching(r, n, [&](const om::Matching& m) {
            out.push_back(m.word());
            return true;
        }, guard);
        emit(out);
        return 0;
    }
    long long total = 0, holds = 0;
    om::for_each_matching(r, n, [&](const om::Matching& m) {
        ++total;
        bool ok;
        if (property == "clean")
            ok = om::is_clean(m);
        else if (property == "has_collectable_pair") {
            ok = false;
            for (int i = 0; i < m.size() && !ok; ++i)
                for (int j = i + 1; j < m.size() && !ok; ++j)
                    ok = om::is_collectable(m.pair_pattern(i, j));
        } else if (property == "roundtrip")
            ok = om::parse_word(m.word()) == m;
        else
            throw std::invalid_argument("unknown property: " + property);
        if (ok) ++holds;
        return true;
    }, guard);
    emit(Json{{"property", property}, {"total", total}, {"holds", holds},
              {"all", total == holds}});
    return 0;
}

int cmd_sample(int r, int n, uint64_t seed, const std::string& scheme) {
    om::Matching m = scheme == "online" ? om::sample_online(r, n, seed)
                                        : om::sample_permutational(r, n, seed);
    emit(om::to_json(m));
    return 0;
}

int cmd_experiment(int r, const std::string& pattern, const std::string& grid, int trials,
                   uint64_t seed, const std::string& method, const std::string& out_path,
                   const std::string& csv_path) {
    std::vector<int> n_grid;
    for (auto& s : split_list(grid)) n_grid.push_back(std::stoi(s));
    int guard = static_cast<int>(env_guard("ORDMATCH_GUARD_CLIQUE", om::kDefaultCliqueGuard));
    om::ExperimentReport rep = om::run_experiment(r, om::Pattern::from_word(pattern), n_grid,
                                                  trials, seed, om::parse_method(method), guard);
    Json j = om::to_json(rep);
    if (!out_path.empty()) {
        std::ofstream f(out_path);
        f << j.dump(2) << "\n";
    }
    if (!csv_path.empty()) {
        std::ofstream f(csv_path);
        f << "n,trial,size\n";
        for (size_t g = 0; g < rep.n_grid.size(); ++g)
            for (size_t t = 0; t < rep.sizes[g].size(); ++t)
                f << rep.n_grid[g] << ',' << t << ',' << rep.sizes[g][t] << "\n";
    }
    emit(j);
    return 0;
}

int cmd_verify(const std::string& suite) {
    std::vector<std::string> only;
    if (!suite.empty() && suite != "all") only = split_list(suite);
    auto results = om::verify::run_all(only);
    if (results.empty()) throw std::invalid_argument("no such suite: " + suite);
    bool ok = true;
    for (const auto& res : results) {
        std::cout << (res.pass ? "PASS" : "FAIL") << "  " << res.id << " " << res.name << "  ("
                  << res.seconds << "s)" << (res.detail.empty() ? "" : "  " + res.detail)
                  << "\n";
        ok = ok && res.pass;
    }
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ordered uniform matchings: patterns, cliques, extraction, experiments"};
    app.require_subcommand(1);

    // patterns
    auto* sp = app.add_subcommand("patterns", "pattern algebra tables");
    int p_r = 3;
    bool p_coll = false, p_part = false, p_bb = false, p_atlas = false;
    std::string p_format = "json";
    sp->add_option("--r", p_r, "uniformity")->required();
    sp->add_flag("--collectable", p_coll);
    sp->add_flag("--partite", p_part);
    sp->add_flag("--big-brothers", p_bb);
    sp->add_flag("--atlas", p_atlas);
    sp->add_option("--format", p_format)->check(CLI::IsMember({"json", "csv", "text"}));

    // analyze
    auto* sa = app.add_subcommand("analyze", "exact maxima and censuses");
    std::string a_input = "-", a_pattern;
    bool a_all = false, a_census = false;
    sa->add_option("--input", a_input, "word, token list, or JSON; - for stdin");
    sa->add_option("--pattern", a_pattern, "restrict to one pattern word");
    sa->add_flag("--all", a_all, "maxima for every pattern");
    sa->add_flag("--census", a_census);

    // extract
    auto* se = app.add_subcommand("extract", "guaranteed clique extraction");
    std::string e_input = "-", e_params;
    bool e_clean = false, e_improved = false;
    se->add_option("--input", e_input);
    se->add_option("--params", e_params, "comma-separated x_1..x_{3^(r-1)}")->required();
    se->add_flag("--clean", e_clean, "integer variant for clean matchings");
    se->add_flag("--improved3", e_improved, "sharper r=3 extraction, 9 integers");

    // enumerate
    auto* sn = app.add_subcommand("enumerate", "exhaustive enumeration and checks");
    int n_r = 2, n_n = 2;
    std::string n_check;
    bool n_count = false;
    sn->add_option("--r", n_r)->required();
    sn->add_option("--n", n_n)->required();
    sn->add_option("--check", n_check, "clean | has_collectable_pair | roundtrip");
    sn->add_flag("--count-only", n_count);

    // construct
    auto* sc = app.add_subcommand("construct", "extremal constructions");
    sc->require_subcommand(1);
    auto* scb = sc->add_subcommand("blowup");
    std::string cb_outer, cb_inner;
    bool cb_validate = false;
    scb->add_option("--outer", cb_outer)->required();
    scb->add_option("--inner", cb_inner)->required();
    scb->add_flag("--validate", cb_validate);
    auto* scc = sc->add_subcommand("chain");
    std::string cc_pattern;
    int cc_n = 2;
    bool cc_validate = false;
    scc->add_option("--pattern", cc_pattern)->required();
    scc->add_option("--n", cc_n)->required();
    scc->add_flag("--validate", cc_validate);
    auto* scl = sc->add_subcommand("layered");
    int cl_r = 2;
    std::string cl_spec;
    bool cl_validate = false;
    scl->add_option("--r", cl_r)->required();
    scl->add_option("--spec", cl_spec, "outermost first, e.g. AABB:2,ABBA:2,ABAB:2")->required();
    scl->add_flag("--validate", cl_validate);
    auto* scp = sc->add_subcommand("p1star");
    int cp_n = 2;
    bool cp_validate = false;
    scp->add_option("--n", cp_n)->required();
    scp->add_flag("--validate", cp_validate);

    // sample
    auto* ss = app.add_subcommand("sample", "uniform random matchings");
    int s_r = 2, s_n = 2;
    uint64_t s_seed = 0;
    std::string s_scheme = "perm";
    ss->add_option("--r", s_r)->required();
    ss->add_option("--n", s_n)->required();
    ss->add_option("--seed", s_seed)->required();
    ss->add_option("--scheme", s_scheme)->check(CLI::IsMember({"perm", "online"}));

    // experiment
    auto* sx = app.add_subcommand("experiment", "Monte-Carlo clique scaling");
    int x_r = 2, x_trials = 100;
    uint64_t x_seed = 0;
    std::string x_pattern, x_grid, x_method = "exact", x_out, x_csv;
    sx->add_option("--r", x_r)->required();
    sx->add_option("--pattern", x_pattern)->required();
    sx->add_option("--grid", x_grid, "comma-separated n values")->required();
    sx->add_option("--trials", x_trials);
    sx->add_option("--seed", x_seed)->required();
    sx->add_option("--method", x_method)->check(CLI::IsMember({"exact", "template", "short_edge"}));
    sx->add_option("--out", x_out, "write the JSON report to a file");
    sx->add_option("--csv", x_csv, "write per-trial sizes as CSV");

    // verify
    auto* sv = app.add_subcommand("verify", "run the acceptance suites");
    std::string v_suite = "all";
    sv->add_option("--suite", v_suite, "all, an id (1..11), a name, or a comma list");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (sp->parsed()) return cmd_patterns(p_r, p_coll, p_part, p_bb, p_atlas, p_format);
        if (sa->parsed()) return cmd_analyze(a_input, a_pattern, a_all, a_census);
        if (se->parsed()) return cmd_extract(e_input, e_params, e_clean, e_improved);
        if (sn->parsed()) return cmd_enumerate(n_r, n_n, n_check, n_count);
        if (ss->parsed()) return cmd_sample(s_r, s_n, s_seed, s_scheme);
        if (sx->parsed())
            return cmd_experiment(x_r, x_pattern, x_grid, x_trials, x_seed, x_method, x_out,
                                  x_csv);
        if (sv->parsed()) return cmd_verify(v_suite);
        if (sc->parsed()) {
            om::Matching result;
            bool validated = false;
            if (scb->parsed()) {
                om::Matching outer = om::matching_from_text(cb_outer);
                om::Matching inner = om::matching_from_text(cb_inner);
                result = om::blow_up(outer, inner);
                if (cb_validate) {
                    if (!om::inheritance_check(outer, inner))
                        throw std::runtime_error("blow-up is not outer-inheritable");
                    validated = true;
                }
            } else if (scc->parsed()) {
                om::Pattern p = om::Pattern::from_word(cc_pattern);
                result = om::chain(p, cc_n);
                if (cc_validate) {
                    auto cs = om::census(result);
                    om::Pattern line = om::Pattern::alignment(p.uniformity());
                    if (cs[p] != cc_n - 1 ||
                        cs[line] != static_cast<long long>(cc_n) * (cc_n - 1) / 2 - (cc_n - 1))
                        throw std::runtime_error("chain census is off");
                    validated = true;
                }
            } else if (scl->parsed()) {
                std::vector<std::pair<om::Pattern, int>> layers;
                for (auto& item : split_list(cl_spec)) {
                    auto colon = item.find(':');
                    if (colon == std::string::npos)
                        throw std::invalid_argument("layer needs WORD:SIZE: " + item);
                    layers.push_back({om::Pattern::from_word(item.substr(0, colon)),
                                      std::stoi(item.substr(colon + 1))});
                }
                result = om::layered_construction(cl_r, layers);
                if (cl_validate) {
                    int guard = static_cast<int>(
                        env_guard("ORDMATCH_GUARD_CLIQUE", om::kDefaultCliqueGuard));
                    if (result.size() > guard)
                        throw om::GuardError("layered result too large to validate exactly");
                    for (auto& [p, k] : layers)
                        if (om::max_clique(result, p, guard).size() != k)
                            throw std::runtime_error("layer maximum is off for " + p.word());
                    validated = true;
                }
            } else {
                result = om::p1star_chain(cp_n);
                if (cp_validate) {
                    auto cs = om::census(result);
                    if (cs.size() > 2 || cs[om::Pattern::from_word("AABABB")] != cp_n - 1 ||
                        (cp_n >= 3 && !cs.count(om::Pattern::from_word("AAABBB"))))
                        throw std::runtime_error("chain census is off");
                    validated = true;
                }
            }
            Json j = om::to_json(result);
            if (validated) j["validated"] = true;
            emit(j);
            return 0;
        }
    } catch (const om::GuardError& e) {
        std::cerr << "guard exceeded: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
