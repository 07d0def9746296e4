#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "aglab/enumerate.hpp"
#include "aglab/harness.hpp"
#include "aglab/report.hpp"

namespace py = pybind11;
using namespace aglab;

namespace {

// Grades cross the boundary as strings ("1/2", "0.25"); exact
// rationals stay on the C++ side.
std::vector<Rat> parse_grades(const std::vector<std::string>& xs) {
    std::vector<Rat> out;
    out.reserve(xs.size());
    for (const auto& x : xs) out.push_back(Rat::parse(x));
    return out;
}

std::vector<std::string> format_grades(const std::vector<Rat>& xs) {
    std::vector<std::string> out;
    out.reserve(xs.size());
    for (const auto& x : xs) out.push_back(x.str());
    return out;
}

IdealKind kind_from_name(const std::string& name) {
    for (IdealKind k : {IdealKind::Subgroupoid, IdealKind::Left, IdealKind::Right,
                        IdealKind::TwoSided, IdealKind::GeneralizedBi, IdealKind::Bi,
                        IdealKind::OneTwo})
        if (name == ideal_kind_name(k)) return k;
    throw std::invalid_argument("unknown ideal kind: " + name);
}

ValueGrid grid_from_spec(const std::string& spec) {
    return spec.empty() ? default_grid() : ValueGrid::parse(spec);
}

} // namespace

PYBIND11_MODULE(_aglab, m) {
    m.doc() = "finite AG-groupoid laboratory";

    py::class_<FiniteMagma>(m, "FiniteMagma")
        .def(py::init<int, std::vector<std::uint8_t>, std::vector<std::string>>(),
             py::arg("order"), py::arg("table"),
             py::arg("labels") = std::vector<std::string>{})
        .def_readonly("n", &FiniteMagma::n)
        .def_readonly("table", &FiniteMagma::table)
        .def("at", &FiniteMagma::at)
        .def("label", &FiniteMagma::label)
        .def("__eq__", [](const FiniteMagma& a, const FiniteMagma& b) { return a == b; })
        .def("__repr__", [](const FiniteMagma& a) {
            return "<FiniteMagma order " + std::to_string(a.n) + ">";
        });

    m.def("parse_cayley_table", &parse_cayley_table_text);
    m.def("format_cayley_table", &format_cayley_table, py::arg("m"),
          py::arg("with_labels") = true);

    m.def("is_left_invertive", &is_left_invertive);
    m.def("is_medial", &is_medial);
    m.def("is_paramedial", &is_paramedial);
    m.def("satisfies_law4", &satisfies_law4);
    m.def("left_identities", &left_identities);
    m.def("is_regular", &is_regular);
    m.def("is_intra_regular", &is_intra_regular);
    m.def("is_ag_band", &is_ag_band);
    m.def("is_left_duo", &is_left_duo);
    m.def("regular_witness", [](const FiniteMagma& m, int a) -> py::object {
        auto w = regular_witness(m, a);
        if (!w) return py::none();
        return py::int_(w->x);
    });
    m.def("intra_regular_witness", [](const FiniteMagma& m, int a) -> py::object {
        auto w = intra_regular_witness(m, a);
        if (!w) return py::none();
        return py::make_tuple(w->x, w->y);
    });

    m.def("subset_product", &subset_product);
    m.def("all_ideals",
          [](const FiniteMagma& m, const std::string& kind) {
              return all_ideals(m, kind_from_name(kind));
          },
          py::arg("m"), py::arg("kind"));
    m.def("is_semiprime_subset", &is_semiprime_subset);
    m.def("format_subset", &format_subset);

    py::class_<IFS>(m, "IFS")
        .def_property_readonly("n", &IFS::n)
        .def_property_readonly("mu", [](const IFS& a) { return format_grades(a.mu); })
        .def_property_readonly("gamma", [](const IFS& a) { return format_grades(a.ga); })
        .def("__eq__", [](const IFS& a, const IFS& b) { return a == b; })
        .def("__repr__", [](const IFS& a) { return format_ifs(a); });

    m.def("make_ifs",
          [](const std::vector<std::string>& mu, const std::vector<std::string>& ga) {
              return make_ifs(parse_grades(mu), parse_grades(ga));
          });
    m.def("unchecked_ifs",
          [](const std::vector<std::string>& mu, const std::vector<std::string>& ga) {
              return IFS::unchecked(parse_grades(mu), parse_grades(ga));
          });
    m.def("characteristic", &characteristic);
    m.def("delta", &delta);
    m.def("ifs_product", &ifs_product);
    m.def("ifs_intersect", &ifs_intersect);
    m.def("ifs_union", &ifs_union);
    m.def("ifs_leq", &ifs_leq);
    m.def("format_ifs", &format_ifs);
    m.def("parse_ifs", &parse_ifs);
    m.def("point_image", [](const IFS& a, int x) {
        auto [mu, ga] = point_image(a, x);
        return py::make_tuple(mu.str(), ga.str());
    });

    m.def("is_if_subgroupoid", &is_if_subgroupoid);
    m.def("is_if_left_ideal", &is_if_left_ideal);
    m.def("is_if_right_ideal", &is_if_right_ideal);
    m.def("is_if_two_sided", &is_if_two_sided);
    m.def("is_if_generalized_bi", &is_if_generalized_bi);
    m.def("is_if_bi", &is_if_bi);
    m.def("is_if_one_two", &is_if_one_two);
    m.def("is_if_semiprime", &is_if_semiprime);
    m.def("is_idempotent", &is_idempotent);
    m.def("left_ideal_violation", &left_ideal_violation);
    m.def("right_ideal_violation", &right_ideal_violation);
    m.def("semiprime_violation", &semiprime_violation);

    m.def("grid_count", [](int n, const std::string& spec) {
        return grid_count(n, grid_from_spec(spec));
    }, py::arg("n"), py::arg("grid") = std::string());

    m.def("count_ag_groupoids",
          [](int order, bool require_left_identity, bool up_to_isomorphism) {
              SearchConfig cfg;
              cfg.order = order;
              cfg.require_left_identity = require_left_identity;
              cfg.up_to_isomorphism = up_to_isomorphism;
              std::uint64_t count = 0;
              enumerate_ag_groupoids(cfg, [&](const FiniteMagma&) { ++count; });
              return count;
          },
          py::arg("order"), py::arg("require_left_identity") = false,
          py::arg("up_to_isomorphism") = false);
    m.def("list_ag_groupoids",
          [](int order, bool require_left_identity, bool up_to_isomorphism) {
              SearchConfig cfg;
              cfg.order = order;
              cfg.require_left_identity = require_left_identity;
              cfg.up_to_isomorphism = up_to_isomorphism;
              std::vector<FiniteMagma> out;
              enumerate_ag_groupoids(cfg, [&](const FiniteMagma& m) { out.push_back(m); });
              return out;
          },
          py::arg("order"), py::arg("require_left_identity") = false,
          py::arg("up_to_isomorphism") = false);
    m.def("oracle_count", &oracle_count);
    m.def("canonical_form", &canonical_form);
    m.def("orbit_size", &orbit_size);

    m.def("check_names", [] {
        std::vector<std::string> names;
        for (CheckId id : all_check_ids()) names.emplace_back(check_id_name(id));
        return names;
    });
    m.def("run_all",
          [](int order_max, const std::string& grid, int workers) {
              return report_to_string(run_all(order_max, grid_from_spec(grid), workers));
          },
          py::arg("order_max") = 3, py::arg("grid") = std::string(),
          py::arg("workers") = 1);
    m.def("run_scenarios", [] {
        return scenarios_to_json(run_scenarios()).dump(2) + "\n";
    });
}
