// Command-line surface: extended-quotient decompositions, finite-model
// verification, Bernstein-shape enumeration and classification, Iwahori and
// spherical queries. JSON output is deterministic; exit codes are
// 0 success, 1 usage, 2 domain error, 3 resource error, 4 verification
// mismatch.

#include <complex>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "eqt/bernstein.hpp"
#include "eqt/errors.hpp"
#include "eqt/iwahori_spherical.hpp"
#include "eqt/partitions.hpp"
#include "eqt/symbolic_eq.hpp"
#include "eqt/torus_model.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_domain = 2;
constexpr int exit_resource = 3;
constexpr int exit_mismatch = 4;

std::string partition_text(const eqt::Partition& lambda) {
  std::string out = "[";
  for (std::size_t i = 0; i < lambda.parts().size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(lambda.parts()[i]);
  }
  return out + "]";
}

std::vector<double> parse_doubles(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t consumed = 0;
    out.push_back(std::stod(item, &consumed));
    if (consumed != item.size())
      throw eqt::domain_error("malformed number \"" + item + "\"");
  }
  if (out.empty()) throw eqt::domain_error("empty list");
  return out;
}

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t consumed = 0;
    out.push_back(std::stoi(item, &consumed));
    if (consumed != item.size())
      throw eqt::domain_error("malformed integer \"" + item + "\"");
  }
  if (out.empty()) throw eqt::domain_error("empty list");
  return out;
}

int run_eq(int n, bool json) {
  eqt::EqDecomposition d = eqt::decomposition(n);
  if (json) {
    std::cout << eqt::to_json(d).dump(2) << "\n";
  } else {
    std::cout << "extended quotient of T^" << n << " by S_" << n << ": "
              << d.components.size() << " components\n";
    for (const auto& c : d.components)
      std::cout << "  " << partition_text(c.index[0]) << " -> "
                << eqt::render_text(c.descriptor) << " (dim "
                << c.descriptor.dimension << ")\n";
  }
  return exit_ok;
}

int run_verify(int n, int m, std::uint64_t budget, bool json) {
  eqt::VerifyReport report = eqt::verify_counts(n, m, budget);
  if (json) {
    std::cout << eqt::to_json(report).dump(2) << "\n";
  } else {
    std::cout << "verify n=" << n << " m=" << m << "\n";
    for (const auto& c : report.classes)
      std::cout << "  " << partition_text(c.partition) << ": oracle "
                << c.oracle << ", symbolic " << c.symbolic
                << (c.oracle == c.symbolic ? "" : "  MISMATCH") << "\n";
    std::cout << "total " << report.total << ", ok "
              << (report.ok ? "true" : "false") << "\n";
  }
  return report.ok ? exit_ok : exit_mismatch;
}

int run_bernstein_enumerate(int n, bool json) {
  auto shapes = eqt::enumerate_shapes(n);
  if (json) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& s : shapes) arr.push_back(eqt::to_json(s));
    std::cout << arr.dump(2) << "\n";
  } else {
    std::cout << shapes.size() << " shapes for n=" << n << "\n";
    for (const auto& s : shapes) {
      std::string text;
      for (const auto& e : s.entries()) {
        if (!text.empty()) text += ";";
        text += std::to_string(e.block_size) + ":" + std::to_string(e.exponent);
      }
      eqt::ShapeInvariants inv = eqt::invariants(s);
      std::cout << "  " << text << "  d=" << inv.d << "  components="
                << eqt::tempered_decomposition(s).components.size() << "\n";
    }
  }
  return exit_ok;
}

int run_bernstein_classify(const std::vector<std::string>& shape_texts, bool json) {
  std::vector<eqt::BernsteinShape> shapes;
  for (const auto& text : shape_texts) shapes.push_back(eqt::parse_shape(text));

  std::vector<std::vector<int>> classes;
  for (int i = 0; i < static_cast<int>(shapes.size()); ++i) {
    bool placed = false;
    for (auto& cls : classes)
      if (eqt::morita_equivalent(shapes[cls.front()], shapes[i])) {
        cls.push_back(i);
        placed = true;
        break;
      }
    if (!placed) classes.push_back({i});
  }

  if (json) {
    nlohmann::ordered_json j;
    auto arr = nlohmann::ordered_json::array();
    for (const auto& s : shapes) arr.push_back(eqt::to_json(s));
    j["shapes"] = arr;
    j["classes"] = classes;
    if (shapes.size() == 2) j["equivalent"] = classes.size() == 1;
    std::cout << j.dump(2) << "\n";
  } else {
    if (shapes.size() == 2) {
      std::cout << "equivalent: " << (classes.size() == 1 ? "true" : "false")
                << "\n";
    } else {
      std::cout << classes.size() << " Morita classes\n";
      for (const auto& cls : classes) {
        std::cout << " ";
        for (int i : cls) std::cout << " " << shape_texts[i];
        std::cout << "\n";
      }
    }
  }
  return exit_ok;
}

int run_iwahori(int n, bool json) {
  bool ok = eqt::theorem32_check(n);
  auto partitions = eqt::enumerate_partitions(n);
  if (json) {
    nlohmann::ordered_json j;
    j["n"] = n;
    auto arr = nlohmann::ordered_json::array();
    for (const auto& blocks : partitions) {
      eqt::SymProduct c = eqt::iwahori_component(blocks);
      arr.push_back({{"blocks", blocks.parts()},
                     {"factors", eqt::to_json(c)},
                     {"dimension", c.dimension}});
    }
    j["components"] = arr;
    j["ok"] = ok;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "Iwahori parameter space for GL(" << n << "): "
              << partitions.size() << " components\n";
    for (const auto& blocks : partitions)
      std::cout << "  blocks " << partition_text(blocks) << " -> "
                << eqt::render_text(eqt::iwahori_component(blocks)) << "\n";
    std::cout << "parameter-space identity: " << (ok ? "true" : "false") << "\n";
  }
  return ok ? exit_ok : exit_mismatch;
}

int run_spherical_eval(int n, const std::string& weight_text,
                       const std::string& point_text, bool json) {
  if (weight_text.empty() != point_text.empty())
    throw eqt::domain_error("spherical-eval: --weight and --point go together");

  if (weight_text.empty()) {
    eqt::SymProduct c = eqt::spherical_component(n);
    if (json) {
      nlohmann::ordered_json j;
      j["n"] = n;
      j["factors"] = eqt::to_json(c);
      j["dimension"] = c.dimension;
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "spherical component for GL(" << n
                << "): " << eqt::render_text(c) << "\n";
    }
    return exit_ok;
  }

  eqt::DominantWeight w(parse_ints(weight_text));
  eqt::AnglePoint p{parse_doubles(point_text)};
  std::complex<double> value = eqt::monomial_symmetric_eval(w, p);
  if (json) {
    nlohmann::ordered_json j;
    j["weight"] = w.exponents;
    j["point"] = p.coords;
    j["value"] = {{"re", value.real()}, {"im", value.imag()}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "m_w(z) = " << value.real() << " + " << value.imag() << "i\n";
  }
  return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Extended quotients of tori and the tempered dual of GL(n)"};
  app.require_subcommand(1);

  int n = 0;
  int grid = 3;
  std::uint64_t budget = eqt::default_point_budget;
  bool json = false;
  std::vector<std::string> shape_texts;
  std::string weight_text;
  std::string point_text;

  auto* eq = app.add_subcommand("eq", "Extended quotient of T^n by S_n");
  eq->add_option("--n", n, "torus dimension")->required();
  eq->add_flag("--json", json, "emit JSON");

  auto* verify = app.add_subcommand(
      "verify", "Check the symbolic decomposition against the finite oracle");
  verify->add_option("--n", n, "torus dimension")->required();
  verify->add_option("--grid", grid, "samples per circle (default 3)");
  verify->add_option("--budget", budget, "point-count limit");
  verify->add_flag("--json", json, "emit JSON");

  auto* benum = app.add_subcommand("bernstein-enumerate",
                                   "All Bernstein shapes for GL(n)");
  benum->add_option("--n", n, "group size")->required();
  benum->add_flag("--json", json, "emit JSON");

  auto* bclass = app.add_subcommand("bernstein-classify",
                                    "Morita classes of the given shapes");
  bclass->add_option("--shape", shape_texts, "shape as \"m:e;m:e;...\"")
      ->required();
  bclass->add_flag("--json", json, "emit JSON");

  auto* iwahori = app.add_subcommand(
      "iwahori", "Components of the Iwahori parameter space for GL(n)");
  iwahori->add_option("--n", n, "group size")->required();
  iwahori->add_flag("--json", json, "emit JSON");

  auto* spherical = app.add_subcommand(
      "spherical-eval",
      "Spherical component; optionally evaluate a monomial symmetric sum");
  spherical->add_option("--n", n, "group size");
  spherical->add_option("--weight", weight_text,
                        "dominant weight, e.g. \"2,0\"");
  spherical->add_option("--point", point_text,
                        "torus point as angles in [0,1), e.g. \"0.25,0.25\"");
  spherical->add_flag("--json", json, "emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    if (eq->parsed()) return run_eq(n, json);
    if (verify->parsed()) return run_verify(n, grid, budget, json);
    if (benum->parsed()) return run_bernstein_enumerate(n, json);
    if (bclass->parsed()) return run_bernstein_classify(shape_texts, json);
    if (iwahori->parsed()) return run_iwahori(n, json);
    if (spherical->parsed()) {
      if (weight_text.empty() && n == 0)
        throw eqt::domain_error("spherical-eval: give --n or --weight/--point");
      return run_spherical_eval(n, weight_text, point_text, json);
    }
  } catch (const eqt::resource_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_resource;
  } catch (const eqt::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_domain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_domain;
  }
  return exit_usage;
}
