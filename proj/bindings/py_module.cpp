#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ordmatch/constructions.hpp"
#include "ordmatch/extract.hpp"
#include "ordmatch/json_io.hpp"
#include "ordmatch/oracle.hpp"
#include "ordmatch/pattern_algebra.hpp"
#include "ordmatch/sampling.hpp"
#include "ordmatch/verify.hpp"

namespace py = pybind11;
namespace om = ordmatch;

namespace {

om::Pattern as_pattern(const std::string& word) { return om::Pattern::from_word(word); }

om::Rational as_rational(const py::handle& v) {
    if (py::isinstance<py::int_>(v)) return om::Rational(v.cast<long long>());
    if (py::isinstance<py::float_>(v)) {
        // floats are dyadic rationals; convert exactly through the mantissa
        double d = v.cast<double>();
        om::Rational q(0);
        int sign = d < 0 ? -1 : 1;
        d = std::abs(d);
        int exp = 0;
        double mant = std::frexp(d, &exp);
        long long m = static_cast<long long>(std::ldexp(mant, 53));
        q = om::Rational(m) * om::pow2(exp - 53);
        return sign < 0 ? -q : q;
    }
    return om::parse_rational(py::str(v).cast<std::string>());
}

py::dict result_dict(const om::ExtractionResult& res) {
    py::dict d;
    d["pattern"] = res.certificate.pattern.word();
    d["index"] = res.pattern_index;
    d["edges"] = res.certificate.edge_indices;
    d["size"] = res.certificate.size();
    d["guarantee"] = om::rational_to_string(res.guarantee);
    return d;
}

py::dict certificate_dict(const om::CliqueCertificate& c) {
    py::dict d;
    d["pattern"] = c.pattern.word();
    d["edges"] = c.edge_indices;
    d["size"] = c.size();
    return d;
}

}  // namespace

PYBIND11_MODULE(_ordmatch, m) {
    m.doc() = "ordered uniform matchings: pattern algebra, clique extraction, "
              "exact oracles, constructions and random experiments";

    py::register_exception<om::GuardError>(m, "GuardError", PyExc_RuntimeError);

    py::class_<om::Matching>(m, "Matching")
        .def_static("from_word", [](const std::string& w) { return om::parse_word(w); })
        .def_static("from_edges",
                    [](int r, std::vector<om::Edge> edges) {
                        return om::Matching::from_edges(r, std::move(edges));
                    })
        .def_property_readonly("r", &om::Matching::uniformity)
        .def_property_readonly("n", &om::Matching::size)
        .def_property_readonly("edges",
                               [](const om::Matching& m) { return m.edges(); })
        .def("word", &om::Matching::word)
        .def("pair_pattern",
             [](const om::Matching& m, int i, int j) { return m.pair_pattern(i, j).word(); })
        .def("__len__", &om::Matching::size)
        .def("__eq__", [](const om::Matching& a, const om::Matching& b) { return a == b; })
        .def("__repr__",
             [](const om::Matching& m) { return "Matching(\"" + m.word() + "\")"; });

    m.def("parse", [](const std::string& text) { return om::matching_from_text(text); },
          "parse a word, token list or JSON into a Matching");

    // pattern algebra
    m.def("enumerate_patterns", [](int r) {
        std::vector<std::string> out;
        for (auto& p : om::enumerate_patterns(r)) out.push_back(p.word());
        return out;
    });
    m.def("split", [](const std::string& w) -> py::object {
        auto d = om::split(as_pattern(w));
        if (!d) return py::none();
        std::vector<std::pair<std::string, int>> blocks;
        for (auto& b : d->blocks) blocks.push_back({std::string(1, b.leader), b.half_length});
        return py::cast(blocks);
    });
    m.def("is_collectable", [](const std::string& w) { return om::is_collectable(as_pattern(w)); });
    m.def("maturity", [](const std::string& w) { return om::maturity(as_pattern(w)); });
    m.def("is_r_partite", [](const std::string& w) { return om::is_r_partite(as_pattern(w)); });
    m.def("decompose", [](const std::string& w) {
        auto [l, r] = om::decompose(as_pattern(w));
        return std::make_pair(l.word(), r.word());
    });
    m.def("decompose_raw", [](const std::string& w) {
        auto [l, r] = om::decompose_raw(as_pattern(w));
        return std::make_pair(l.word(), r);
    });
    m.def("children", [](const std::string& q, int j) {
        std::vector<std::string> out;
        for (auto& p : om::children(as_pattern(q), j)) out.push_back(p.word());
        return out;
    });
    m.def("big_brothers", [](int r) {
        std::vector<std::string> out;
        for (auto& p : om::big_brothers(r)) out.push_back(p.word());
        return out;
    });
    m.def("collectable_index", [](int r) {
        std::vector<std::string> out;
        for (auto& p : om::collectable_index(r).table) out.push_back(p.word());
        return out;
    });
    m.def("total_maturity", &om::total_maturity);
    m.def("canonical_clique",
          [](const std::string& w, int k) { return om::canonical_clique(as_pattern(w), k); });

    // core checks
    m.def("check_certificate",
          [](const om::Matching& m, const std::string& pattern, std::vector<int> edges) {
              return om::check_certificate(m, {as_pattern(pattern), std::move(edges)});
          });

    // extraction
    m.def("es_base2", [](const om::Matching& m, const py::handle& x1, const py::handle& x2,
                         const py::handle& x3) {
        return result_dict(om::es_base2(m, as_rational(x1), as_rational(x2), as_rational(x3)));
    });
    m.def("extract_clique", [](const om::Matching& m, const py::list& xs) {
        std::vector<om::Rational> values;
        for (auto v : xs) values.push_back(as_rational(v));
        return result_dict(om::extract_clique(m, om::ParamVector::of(m.uniformity(), values)));
    });
    m.def("extract_clean", [](const om::Matching& m, std::vector<long long> a) {
        return result_dict(om::extract_clean(m, a));
    });
    m.def("extract3_improved", [](const om::Matching& m, std::vector<long long> a) {
        return result_dict(om::extract3_improved(m, a));
    });
    m.def("halve_family",
          [](const om::Matching& m, std::vector<int> indices, const std::string& bb) {
              return certificate_dict(om::halve_family(m, indices, as_pattern(bb)));
          });

    // exact oracles
    m.def("alpha", [](int r, int n) { return py::cast(om::alpha(r, n).str()); });
    m.def("all_matchings",
          [](int r, int n, long long guard) { return om::all_matchings(r, n, guard); },
          py::arg("r"), py::arg("n"), py::arg("guard") = om::kDefaultEnumGuard);
    m.def("max_clique",
          [](const om::Matching& m, const std::string& p, int guard) {
              return certificate_dict(om::max_clique(m, as_pattern(p), guard));
          },
          py::arg("m"), py::arg("pattern"), py::arg("guard") = om::kDefaultCliqueGuard);
    m.def("max_line", [](const om::Matching& m) { return certificate_dict(om::max_line_fast(m)); });
    m.def("max_stack_wave", [](const om::Matching& m) {
        auto sw = om::max_stack_wave_fast(m);
        return std::make_pair(certificate_dict(sw.stack), certificate_dict(sw.wave));
    });
    m.def("census", [](const om::Matching& m) {
        py::dict d;
        for (auto& [p, cnt] : om::census(m)) d[py::str(p.word())] = cnt;
        return d;
    });
    m.def("is_clean", [](const om::Matching& m) { return om::is_clean(m); });

    // constructions
    m.def("blow_up", &om::blow_up);
    m.def("inheritance_check", &om::inheritance_check);
    m.def("refines", &om::refines);
    m.def("layered_construction",
          [](int r, const std::vector<std::pair<std::string, int>>& spec) {
              std::vector<std::pair<om::Pattern, int>> layers;
              for (auto& [w, k] : spec) layers.push_back({as_pattern(w), k});
              return om::layered_construction(r, layers);
          });
    m.def("is_chainable", [](const std::string& w) { return om::is_chainable(as_pattern(w)); });
    m.def("chain", [](const std::string& w, int n) { return om::chain(as_pattern(w), n); });
    m.def("p1star_chain", &om::p1star_chain);

    // sampling and experiments
    m.def("sample", [](int r, int n, uint64_t seed, const std::string& scheme) {
        if (scheme == "online") return om::sample_online(r, n, seed);
        if (scheme == "perm") return om::sample_permutational(r, n, seed);
        throw std::invalid_argument("scheme must be perm or online");
    }, py::arg("r"), py::arg("n"), py::arg("seed"), py::arg("scheme") = "perm");
    m.def("f_count", [](int r, int s, int n, int m_) { return om::f_count(r, s, n, m_).str(); });
    m.def("expected_cliques", [](int r, int n, int k, const std::string& p) {
        return om::rational_to_string(om::expected_cliques(r, n, k, as_pattern(p)));
    });
    m.def("short_edge_line", [](const om::Matching& m, int bound) {
        return certificate_dict(om::short_edge_line(m, bound));
    });
    m.def("template_clique", [](const om::Matching& m, const std::string& p, int k, int t) {
        return certificate_dict(om::template_clique(m, as_pattern(p), k, t));
    });
    m.def("run_experiment",
          [](int r, const std::string& pattern, std::vector<int> grid, int trials,
             uint64_t seed, const std::string& method) {
              om::ExperimentReport rep = om::run_experiment(
                  r, as_pattern(pattern), grid, trials, seed, om::parse_method(method));
              py::dict d;
              d["r"] = rep.r;
              d["pattern"] = rep.pattern.word();
              d["method"] = rep.method;
              d["seed"] = rep.seed;
              d["trials"] = rep.trials;
              d["n_grid"] = rep.n_grid;
              d["sizes"] = rep.sizes;
              d["mean"] = rep.mean;
              d["stddev"] = rep.stddev;
              d["slope"] = rep.slope;
              d["slope_stderr"] = rep.slope_stderr;
              d["upper_violations"] = rep.upper_violations;
              return d;
          },
          py::arg("r"), py::arg("pattern"), py::arg("grid"), py::arg("trials"),
          py::arg("seed"), py::arg("method") = "exact");

    // acceptance suite
    m.def("verify", [](const std::vector<std::string>& only) {
        py::list out;
        for (auto& res : ordmatch::verify::run_all(only)) {
            py::dict d;
            d["id"] = res.id;
            d["name"] = res.name;
            d["pass"] = res.pass;
            d["detail"] = res.detail;
            d["seconds"] = res.seconds;
            out.append(d);
        }
        return out;
    }, py::arg("only") = std::vector<std::string>{});
}
