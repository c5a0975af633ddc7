#include "foldcob/catalog.hpp"
#include "foldcob/free_approximation.hpp"
#include "foldcob/json_io.hpp"

#include <CLI11.hpp>

#include <functional>
#include <iostream>

#ifdef FOLDCOB_HAVE_SELFTEST
#include "criteria.hpp"
#endif

namespace {

using foldcob::InputError;
using foldcob::io::Json;
namespace algebra = foldcob::algebra;
namespace fibers = foldcob::fibers;
namespace reeb = foldcob::reeb;
namespace circle = foldcob::circle;

// Raised for argument combinations that parse but make no sense, e.g. a degree past the top.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const Json& j) { std::cout << j.dump() << '\n'; }

std::vector<std::string> catalog_names() {
  std::vector<std::string> out;
  for (auto id : fibers::all_catalog_ids()) out.push_back(fibers::to_string(id));
  return out;
}

const std::vector<std::string> kCategories{"oriented", "unoriented", "simple_oriented", "simple_unoriented"};

std::size_t checked_degree(const algebra::MixedComplex& cx, long deg) {
  if (deg < 0 || static_cast<std::size_t>(deg) >= cx.num_degrees())
    throw UsageError("degree " + std::to_string(deg) + " is outside 0.." + std::to_string(cx.num_degrees() - 1) +
                     " for " + cx.id);
  return static_cast<std::size_t>(deg);
}

reeb::ReebGraph load_graph(const std::string& path, reeb::Category c) {
  reeb::ReebGraph g = foldcob::io::reeb_from_json(foldcob::io::read_json_file(path));
  reeb::require_valid(g);
  reeb::require_category(g, c);
  return g;
}

reeb::Category category(const std::string& name) { return *reeb::parse_category(name); }

int run(int argc, char** argv) {
  CLI::App app{"Fold cobordism toolkit: fiber catalogs, homology, Reeb graph invariants and cusp counts"};
  app.require_subcommand(1);
  std::function<int()> action;

  auto* catalog_cmd = app.add_subcommand("catalog", "Universal complexes of singular fibers");
  catalog_cmd->require_subcommand(1);
  catalog_cmd->add_subcommand("list", "List catalog ids with their sizes")->callback([&] {
    action = [] {
      Json out = Json::array();
      for (auto id : fibers::all_catalog_ids()) {
        const auto cx = fibers::catalog(id);
        Json degrees = Json::array();
        for (std::size_t k = 0; k < cx.num_degrees(); ++k) degrees.push_back(cx.size(k));
        out.push_back(Json{{"id", fibers::to_string(id)}, {"direction", algebra::to_string(cx.direction)},
                           {"degrees", degrees}});
      }
      emit(out);
      return 0;
    };
  });
  std::string export_id;
  auto* export_cmd = catalog_cmd->add_subcommand("export", "Print one complex as JSON");
  export_cmd->add_option("--id", export_id, "Catalog id")->required()->check(CLI::IsMember(catalog_names()));
  export_cmd->callback([&] {
    action = [&] {
      emit(foldcob::io::complex_to_json(fibers::catalog(*fibers::parse_catalog_id(export_id))));
      return 0;
    };
  });

  std::string hom_id;
  long hom_deg = 0;
  bool hom_basis = false;
  auto* hom_cmd = app.add_subcommand("homology", "Homology group of a catalog complex in one degree");
  hom_cmd->add_option("--id", hom_id, "Catalog id")->required()->check(CLI::IsMember(catalog_names()));
  hom_cmd->add_option("--deg", hom_deg, "Degree")->required();
  hom_cmd->add_flag("--basis", hom_basis, "Include representative cycles");
  hom_cmd->callback([&] {
    action = [&] {
      const auto cx = fibers::catalog(*fibers::parse_catalog_id(hom_id));
      emit(foldcob::io::group_to_json(algebra::homology(cx, checked_degree(cx, hom_deg)), hom_basis));
      return 0;
    };
  });

  std::string variant_name;
  long susp_deg = 1;
  auto* susp_cmd = app.add_subcommand("suspension", "Pullback along the suspension map in cohomology");
  susp_cmd->add_option("--variant", variant_name, "co_Z or full_Z2")
      ->required()
      ->check(CLI::IsMember({"co_Z", "full_Z2"}));
  susp_cmd->add_option("--deg", susp_deg, "Degree")->capture_default_str();
  susp_cmd->callback([&] {
    action = [&] {
      const auto variant = *fibers::parse_suspension_variant(variant_name);
      const auto f = fibers::suspension_map(variant);
      const auto g = variant == fibers::SuspensionVariant::CoZ ? algebra::Coefficients::Z : algebra::Coefficients::Z2;
      const auto deg = checked_degree(f.source, susp_deg);
      Json out;
      out["variant"] = variant_name;
      out["coefficients"] = algebra::to_string(g);
      out["degree"] = deg;
      out["map"] = foldcob::io::induced_map_to_json(algebra::induced_map(f, deg, algebra::Side::Cohomology, g));
      emit(out);
      return 0;
    };
  });

  std::string coeff_name;
  long hyper_deg = 0;
  auto* hyper_cmd = app.add_subcommand("hyper", "Cohomology of the free approximation of V32 and its comparison map");
  hyper_cmd->add_option("--coeff", coeff_name, "Z or Z2")->required()->check(CLI::IsMember({"Z", "Z2"}));
  hyper_cmd->add_option("--deg", hyper_deg, "Degree 0, 1 or 2")->required()->check(CLI::Range(0, 2));
  hyper_cmd->callback([&] {
    action = [&] {
      const auto g = coeff_name == "Z" ? algebra::Coefficients::Z : algebra::Coefficients::Z2;
      const auto h = algebra::hypercohomology(fibers::catalog(fibers::CatalogId::V32), g,
                                              static_cast<std::size_t>(hyper_deg));
      Json out;
      out["group"] = foldcob::io::group_to_json(h.group);
      out["comparison"] = foldcob::io::induced_map_to_json(h.comparison);
      emit(out);
      return 0;
    };
  });

  std::string inv_in, inv_cat;
  auto* inv_cmd = app.add_subcommand("invariants", "Cobordism invariants (z, w) of a Reeb graph");
  inv_cmd->add_option("--in", inv_in, "Reeb graph JSON file")->required();
  inv_cmd->add_option("--category", inv_cat, "Category")->required()->check(CLI::IsMember(kCategories));
  inv_cmd->callback([&] {
    action = [&] {
      const auto c = category(inv_cat);
      emit(foldcob::io::invariants_to_json(reeb::invariants(load_graph(inv_in, c), c)));
      return 0;
    };
  });

  std::string red_in, red_cat;
  auto* red_cmd = app.add_subcommand("reduce", "Normal form, move trace and canonical graph");
  red_cmd->add_option("--in", red_in, "Reeb graph JSON file")->required();
  red_cmd->add_option("--category", red_cat, "Category")->required()->check(CLI::IsMember(kCategories));
  red_cmd->callback([&] {
    action = [&] {
      const auto c = category(red_cat);
      emit(foldcob::io::normal_form_to_json(reeb::reduce_to_normal_form(load_graph(red_in, c), c)));
      return 0;
    };
  });

  std::string cob_a, cob_b, cob_cat;
  auto* cob_cmd = app.add_subcommand("cobordant", "Decide whether two Reeb graphs are cobordant");
  cob_cmd->add_option("--a", cob_a, "First Reeb graph JSON file")->required();
  cob_cmd->add_option("--b", cob_b, "Second Reeb graph JSON file")->required();
  cob_cmd->add_option("--category", cob_cat, "Category")->required()->check(CLI::IsMember(kCategories));
  cob_cmd->callback([&] {
    action = [&] {
      const auto c = category(cob_cat);
      const bool same = reeb::cobordant(load_graph(cob_a, c), load_graph(cob_b, c), c);
      emit(Json{{"cobordant", same}});
      return 0;
    };
  });

  std::string cusp_in;
  auto* cusp_cmd = app.add_subcommand("cusp", "Algebraic number of cusps from a circle fiber diagram");
  cusp_cmd->add_option("--in", cusp_in, "Diagram JSON file")->required();
  cusp_cmd->callback([&] {
    action = [&] {
      const auto d = foldcob::io::diagram_from_json(foldcob::io::read_json_file(cusp_in));
      circle::require_valid(d);
      const auto r = circle::cusp_count(d);
      if (!r.consistent) std::cerr << r.diagnostic << '\n';
      emit(Json{{"cusps", r.cusps}, {"cross_check", r.consistent ? "ok" : "mismatch"}});
      return 0;
    };
  });

  std::string ident_id;
  auto* ident_cmd = app.add_subcommand("identities", "Counting identities from the degree-1 coboundary");
  ident_cmd->add_option("--id", ident_id, "CO32, CUSP32 or BCUSP32")
      ->required()
      ->check(CLI::IsMember({"CO32", "CUSP32", "BCUSP32"}));
  ident_cmd->callback([&] {
    action = [&] {
      emit(foldcob::io::identities_to_json(fibers::counting_identities(*fibers::parse_catalog_id(ident_id))));
      return 0;
    };
  });

  bool self_verbose = false;
  auto* self_cmd = app.add_subcommand("selftest", "Run the acceptance criteria");
  self_cmd->add_flag("-v,--verbose", self_verbose, "Print notes for each criterion");
  self_cmd->callback([&] {
    action = [&] {
#ifdef FOLDCOB_HAVE_SELFTEST
      bool ok = true;
      for (const auto& r : foldcob::acceptance::run_all()) {
        std::cout << foldcob::acceptance::format(r, self_verbose) << '\n';
        ok = ok && r.passed;
      }
      return ok ? 0 : 1;
#else
      std::cerr << "error: this build does not include the acceptance suite\n";
      return 1;
#endif
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    return action();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
}
