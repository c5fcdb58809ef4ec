// matchfield: weight vectors, degree-2 matching field ideals, SAGBI
// certificates, typed tableau maps, and matching field polytopes for
// block diagonal matching fields on the flag variety.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "matchfield/errors.hpp"
#include "matchfield/face_lattice.hpp"
#include "matchfield/pideal.hpp"
#include "matchfield/polytope.hpp"
#include "matchfield/reproduce.hpp"
#include "matchfield/sagbi.hpp"
#include "matchfield/standard_basis.hpp"
#include "matchfield/weights.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMathFailure = 2;
constexpr int kExitUsage = 64;

std::vector<int> parse_ells(const std::string& ell, int n) {
  if (ell == "all") {
    std::vector<int> out;
    for (int e = 0; e <= n; ++e) out.push_back(e);
    return out;
  }
  size_t pos = 0;
  int value = std::stoi(ell, &pos);
  if (pos != ell.size()) throw CLI::ValidationError("--ell", "expected an integer or 'all'");
  if (value < 0 || value > n) throw CLI::ValidationError("--ell", "ell must lie in [0, n]");
  return {value};
}

nlohmann::json weight_json(int n, int ell) {
  mf::WeightMatrix m = mf::weight_matrix_block(n, ell);
  nlohmann::json j;
  j["n"] = n;
  j["ell"] = ell;
  auto& rows = j["matrix"] = nlohmann::json::array();
  for (int r = 1; r <= n; ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (int c = 1; c <= n; ++c) row.push_back(static_cast<long>(m.at(r, c)));
    rows.push_back(std::move(row));
  }
  auto& weights = j["weights"] = nlohmann::json::array();
  for (const mf::Subset& I : mf::all_proper_subsets(n)) {
    mf::InitialTermReport rep = mf::initial_term(m, I);
    weights.push_back({{"subset", I.elems},
                       {"weight", static_cast<long>(rep.weight)},
                       {"sign", rep.sign}});
  }
  return j;
}

int run_weights(int n, const std::string& ell_arg, bool as_json) {
  for (int ell : parse_ells(ell_arg, n)) {
    if (as_json) {
      std::cout << weight_json(n, ell).dump(2) << "\n";
      continue;
    }
    mf::WeightMatrix m = mf::weight_matrix_block(n, ell);
    std::cout << "M_" << ell << " (n=" << n << "):\n";
    for (int r = 1; r <= n; ++r) {
      std::cout << " ";
      for (int c = 1; c <= n; ++c) std::cout << " " << m.at(r, c);
      std::cout << "\n";
    }
    mf::WeightVector w = mf::weight_vector(m);
    std::cout << "w_" << ell << " = (";
    for (size_t i = 0; i < w.weights.size(); ++i) std::cout << (i ? "," : "") << w.weights[i];
    std::cout << ")\n";
  }
  return kExitOk;
}

int run_ideal(int n, const std::string& ell_arg, std::optional<int> k, bool as_json) {
  for (int ell : parse_ells(ell_arg, n)) {
    mf::MatchingField field = mf::MatchingField::block(n, ell);
    auto kernel = mf::degree2_kernel(field, k);
    if (as_json) {
      nlohmann::json j;
      j["n"] = n;
      j["ell"] = ell;
      if (k) j["grassmannian"] = *k;
      auto& gens = j["generators"] = nlohmann::json::array();
      for (const auto& b : kernel) {
        nlohmann::json g;
        g["text"] = b.to_string(field);
        auto term = [](const mf::PMonomial& m, int c) {
          nlohmann::json t;
          t["coeff"] = c;
          auto& fs = t["monomial"] = nlohmann::json::array();
          for (const mf::Subset& I : m.factors) fs.push_back(I.elems);
          return t;
        };
        g["lead"] = term(b.lead, b.lead_coeff);
        g["tail"] = term(b.tail, b.tail_coeff);
        gens.push_back(std::move(g));
      }
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "in_w(I) degree-2 generators, n=" << n << " ell=" << ell;
      if (k) std::cout << " Gr(k=" << *k << ")";
      std::cout << " [" << kernel.size() << "]:\n";
      for (const auto& b : kernel) std::cout << "  " << b.to_string(field) << "\n";
    }
  }
  return kExitOk;
}

int run_certify(int n, const std::string& ell_arg, std::optional<int> k) {
  bool all_ok = true;
  for (int ell : parse_ells(ell_arg, n)) {
    mf::SagbiReport rep = mf::sagbi_certificate_degree2(n, ell, k);
    bool ok = rep.certified();
    all_ok = all_ok && ok;
    std::cout << "n=" << n << " ell=" << ell << (k ? " k=" + std::to_string(*k) : "")
              << ": quadratic_generation=" << (rep.quadratic_generation ? "true" : "false")
              << " dim_equal=" << (rep.dim_equal ? "true" : "false")
              << " lifts_exist=" << (rep.lifts_exist ? "true" : "false")
              << (ok ? "  certified" : "  NOT CERTIFIED") << "\n";
    for (const auto& f : rep.failures) std::cout << "    " << f << "\n";
  }
  return all_ok ? kExitOk : kExitMathFailure;
}

int run_tableau(const std::string& action, int n, int ell, const std::string& tableau_json) {
  nlohmann::json j = nlohmann::json::parse(tableau_json);
  mf::Tableau t = mf::Tableau::from_json(j);
  if (t.n == 0) t.n = n;
  if (t.n != n) throw CLI::ValidationError("--tableau", "tableau n disagrees with --n");

  if (action == "classify") {
    std::cout << mf::classify_flag(t, ell).tag() << "\n";
    return kExitOk;
  }
  if (action == "map") {
    mf::SSYT u = mf::s_flag(t, ell);
    std::cout << u.as_tableau().to_json().dump() << "\n";
    return kExitOk;
  }
  if (action == "invert") {
    if (t.column_count() != 2) throw CLI::ValidationError("--tableau", "need two columns");
    mf::SSYT u;
    u.n = n;
    u.left = t.columns[0];
    u.right = t.columns[1];
    if (u.left.size() < u.right.size()) std::swap(u.left, u.right);
    mf::Tableau pre = mf::s_flag_inverse(u, ell);
    std::cout << pre.to_json().dump() << "\n";
    return kExitOk;
  }
  if (action == "normalize") {
    std::cout << mf::normalize_to_basis(t, ell).to_json().dump() << "\n";
    return kExitOk;
  }
  throw CLI::ValidationError("action", "expected classify|map|invert|normalize");
}

nlohmann::json facet_json(const mf::ConvexHull::Facet& f) {
  nlohmann::json j;
  j["offset"] = f.ineq[0].str();
  auto& normal = j["normal"] = nlohmann::json::array();
  for (size_t i = 1; i < f.ineq.size(); ++i) normal.push_back(f.ineq[i].str());
  j["tight"] = f.tight_points;
  return j;
}

int run_polytope(int n, const std::string& ell_arg, bool want_fvector, bool want_facets,
                 bool as_json, bool vertex_check) {
  for (int ell : parse_ells(ell_arg, n)) {
    mf::PointConfiguration config = mf::matching_field_polytope(n, ell);
    if (vertex_check) {
      auto flags = mf::vertex_flags(config.points);
      size_t vertices = 0;
      for (char f : flags) vertices += f;
      std::cout << "n=" << n << " ell=" << ell << ": " << config.points.size() << " points, "
                << vertices << " hull vertices"
                << (vertices == config.points.size() ? " (all points in convex position)" : "")
                << "\n";
      continue;
    }
    if (n > 5)
      throw mf::NonGenericWeight(  // reuse exit-2 path below
          "polytope: hull and face enumeration are supported for n <= 5; "
          "use --vertex-check for larger n");

    mf::PolytopeAnalysis analysis = mf::analyze_polytope(config);
    if (as_json) {
      nlohmann::json j;
      j["n"] = n;
      j["ell"] = ell;
      j["ambient_dim"] = config.ambient_dim;
      j["affine_dim"] = analysis.hull.affine_dim;
      auto& pts = j["points"] = nlohmann::json::array();
      for (size_t i = 0; i < config.points.size(); ++i) {
        nlohmann::json p;
        p["subset"] = config.subsets[i].elems;
        auto& coords = p["coords"] = nlohmann::json::array();
        for (const mf::Int& c : config.points[i]) coords.push_back(static_cast<long>(c));
        p["vertex"] = static_cast<bool>(analysis.hull.is_vertex[i]);
        pts.push_back(std::move(p));
      }
      auto& facets = j["facets"] = nlohmann::json::array();
      for (const auto& f : analysis.hull.facets) facets.push_back(facet_json(f));
      auto& ah = j["affine_hull"] = nlohmann::json::array();
      for (const auto& eq : analysis.hull.affine_hull_equations) {
        nlohmann::json e = nlohmann::json::array();
        for (const mf::Int& c : eq) e.push_back(c.str());
        ah.push_back(std::move(e));
      }
      j["fvector"] = analysis.lattice.f_vector;
      std::cout << j.dump(2) << "\n";
      continue;
    }
    if (want_fvector) {
      std::cout << "f-vector n=" << n << " ell=" << ell << ": (";
      for (size_t i = 0; i < analysis.lattice.f_vector.size(); ++i)
        std::cout << (i ? "," : "") << analysis.lattice.f_vector[i];
      std::cout << ")\n";
      continue;
    }
    if (want_facets) {
      std::cout << "facets n=" << n << " ell=" << ell << " [" << analysis.hull.facet_count()
                << "]:\n";
      for (const auto& f : analysis.hull.facets) {
        std::cout << "  " << f.ineq[0];
        for (size_t i = 1; i < f.ineq.size(); ++i)
          std::cout << (f.ineq[i] >= 0 ? " +" : " ") << f.ineq[i] << "*x" << i;
        std::cout << " >= 0\n";
      }
      continue;
    }
    std::cout << "n=" << n << " ell=" << ell << ": " << config.points.size()
              << " points, affine dim " << analysis.hull.affine_dim << ", "
              << analysis.hull.vertex_count() << " vertices, " << analysis.hull.facet_count()
              << " facets\n";
  }
  return kExitOk;
}

int run_polytope_isomorphic(int n, int ell1, int ell2) {
  if (n > 5)
    throw mf::NonGenericWeight("polytope isomorphic: supported for n <= 5");
  auto hull1 = mf::convex_hull(mf::matching_field_polytope(n, ell1).points);
  auto hull2 = mf::convex_hull(mf::matching_field_polytope(n, ell2).points);
  bool iso = mf::combinatorially_isomorphic(hull1, hull2);
  std::cout << "n=" << n << " ell=" << ell1 << " vs ell=" << ell2 << ": "
            << (iso ? "isomorphic" : "not isomorphic") << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"toric degenerations of flag varieties from block diagonal matching fields"};
  app.require_subcommand(1);

  int n = 3;
  std::string ell = "0";
  bool as_json = false;

  auto* weights = app.add_subcommand("weights", "print M_ell and the induced weight vector");
  weights->add_option("--n", n, "ambient size")->required();
  weights->add_option("--ell", ell, "block split (integer or 'all')");
  weights->add_flag("--json", as_json, "emit JSON");

  std::optional<int> grassmannian;
  auto* ideal = app.add_subcommand("ideal", "degree-2 matching field ideal generators");
  ideal->add_option("--n", n, "ambient size")->required();
  ideal->add_option("--ell", ell, "block split (integer or 'all')");
  ideal->add_option("--grassmannian", grassmannian, "restrict to |I| = k");
  ideal->add_flag("--json", as_json, "emit JSON");

  auto* certify = app.add_subcommand("certify", "degree-2 SAGBI certificate (exit 2 on failure)");
  certify->add_option("--n", n, "ambient size")->required();
  certify->add_option("--ell", ell, "block split (integer or 'all')");
  certify->add_option("--grassmannian", grassmannian, "restrict to |I| = k");

  std::string action, tableau_json;
  auto* tableau = app.add_subcommand("tableau", "classify / map / invert / normalize tableaux");
  tableau->add_option("action", action, "classify|map|invert|normalize")->required();
  tableau->add_option("--n", n, "ambient size")->required();
  tableau->add_option("--ell", ell, "block split");
  tableau->add_option("--tableau", tableau_json, "tableau as JSON {\"n\":..,\"columns\":[[..]]}")
      ->required();

  bool want_fvector = false, want_facets = false, vertex_check = false;
  auto* polytope = app.add_subcommand("polytope", "matching field polytopes");
  polytope->add_option("--n", n, "ambient size")->required();
  polytope->add_option("--ell", ell, "block split (integer or 'all')");
  polytope->add_flag("--fvector", want_fvector, "print the f-vector");
  polytope->add_flag("--facets", want_facets, "print facet inequalities");
  polytope->add_flag("--json", as_json, "emit JSON");
  polytope->add_flag("--vertex-check", vertex_check, "LP-based convex position check");

  int ell1 = 0, ell2 = 0;
  auto* isomorphic = polytope->add_subcommand("isomorphic", "compare two face lattices");
  isomorphic->add_option("--n", n, "ambient size")->required();
  isomorphic->add_option("--ell1", ell1, "first block split")->required();
  isomorphic->add_option("--ell2", ell2, "second block split")->required();

  std::string target;
  auto* repro = app.add_subcommand("reproduce", "recompute embedded reference data");
  repro->add_option("target", target, "example-2-2 | example-2-3 | table-1 | section-4-examples")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*weights) return run_weights(n, ell, as_json);
    if (*ideal) return run_ideal(n, ell, grassmannian, as_json);
    if (*certify) return run_certify(n, ell, grassmannian);
    if (*tableau) return run_tableau(action, n, ell == "all" ? 0 : std::stoi(ell), tableau_json);
    if (*polytope) {
      if (*isomorphic) return run_polytope_isomorphic(n, ell1, ell2);
      return run_polytope(n, ell, want_fvector, want_facets, as_json, vertex_check);
    }
    if (*repro) {
      mf::ReproduceResult res = mf::reproduce(target);
      std::cout << res.report;
      return res.exit_code;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const mf::NonGenericWeight& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMathFailure;
  } catch (const mf::NoLift& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMathFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMathFailure;
  }
  return kExitUsage;
}
