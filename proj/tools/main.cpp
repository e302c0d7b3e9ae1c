#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "acceptance.hpp"
#include "golden.hpp"
#include "hankelray/errors.hpp"
#include "hankelray/extremal.hpp"
#include "hankelray/serialize.hpp"

namespace {

namespace fs = std::filesystem;
using namespace hankelray;

constexpr int kExitOk = 0;
constexpr int kExitCertificationFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

struct Options {
  std::string output_dir;
  std::string format = "json";  // json | csv | text
  int d = 0;
  int rank = 13;
  int from = 4;
  int to = 100;
  std::optional<std::size_t> remove_index;
  std::string input_path;
  std::uint64_t seed = 1;
};

fs::path resolve_output_dir(const Options& opt) {
  if (!opt.output_dir.empty()) return opt.output_dir;
  if (const char* env = std::getenv("HANKELRAY_OUTPUT_DIR")) return env;
  return ".";
}

void write_file(const fs::path& path, const std::string& content) {
  fs::create_directories(path.parent_path().empty() ? "." : path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  out << content;
}

void print_certificate_summary(const ExtremeRayCertificate& cert) {
  std::cout << "d=" << cert.d << " rank=" << cert.rank
            << " corank=" << cert.corank << " psd="
            << (cert.psd.verdict == PsdVerdict::Psd ? "PSD" : "NotPSD")
            << " hyperplane=" << cert.hyperplane_dim << "/"
            << cert.hyperplane_target
            << " extreme=" << (cert.is_extreme ? "yes" : "no") << "\n";
  std::cout << "hilbert=" << hilbert_to_json(cert.hilbert) << "\n";
}

int cmd_construct(const Options& opt) {
  const fs::path dir = resolve_output_dir(opt);
  const ConstructionResult construction =
      construct_max_rank(opt.d, opt.remove_index);
  const ExtremeRayCertificate cert = certify_construction(construction);

  const std::string stem = "construct_d" + std::to_string(opt.d);
  write_file(dir / (stem + ".certificate.json"),
             construction_to_json(construction, cert));
  write_file(dir / (stem + ".hankel.csv"),
             qmatrix_to_csv(hankel(construction.ell)));
  write_file(dir / (stem + ".functional.json"),
             functional_to_json(construction.ell));

  if (opt.format == "json") {
    std::cout << construction_to_json(construction, cert) << "\n";
  } else {
    print_certificate_summary(cert);
    if (construction.t0)
      std::cout << "perturbation t0=" << to_string(*construction.t0) << "\n";
  }
  return cert.is_extreme ? kExitOk : kExitCertificationFailure;
}

int cmd_certify(const Options& opt) {
  std::ifstream in(opt.input_path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot read " << opt.input_path << "\n";
    return kExitUsage;
  }
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  const Functional ell = functional_from_json(text);
  const ExtremeRayCertificate cert = certify(ell);
  const fs::path dir = resolve_output_dir(opt);
  write_file(dir / "certify.certificate.json", certificate_to_json(cert));
  if (opt.format == "json")
    std::cout << certificate_to_json(cert) << "\n";
  else
    print_certificate_summary(cert);
  return cert.is_extreme ? kExitOk : kExitCertificationFailure;
}

int cmd_relation(const Options& opt) {
  const PointConfig config = gamma_split(opt.d);
  const Relation rel = unique_relation(config.gamma1_points(), opt.d);
  const fs::path dir = resolve_output_dir(opt);
  const std::string stem = "relation_d" + std::to_string(opt.d);
  write_file(dir / (stem + ".json"), relation_grid_json(rel, opt.d));
  write_file(dir / (stem + ".csv"),
             qmatrix_to_csv(relation_grid_matrix(rel, opt.d)));
  if (opt.format == "csv")
    std::cout << qmatrix_to_csv(relation_grid_matrix(rel, opt.d));
  else if (opt.format == "json")
    std::cout << relation_grid_json(rel, opt.d) << "\n";
  else
    std::cout << "wrote " << (dir / (stem + ".json")).string() << " and .csv\n";
  return kExitOk;
}

int cmd_catalog(const Options& opt) {
  const CatalogEntry entry = d5_catalog(opt.rank);
  const fs::path dir = resolve_output_dir(opt);
  const std::string stem = "catalog_d5_rank" + std::to_string(opt.rank);
  write_file(dir / (stem + ".certificate.json"),
             construction_to_json(entry.construction, entry.certificate));
  write_file(dir / (stem + ".functional.json"),
             functional_to_json(entry.construction.ell));

  bool match = static_cast<int>(entry.certificate.rank) == opt.rank &&
               entry.certificate.is_extreme &&
               entry.certificate.dual_variety_criterion;
  std::string diff;
  for (int j = 0; j <= 10; ++j) {
    if (entry.certificate.hilbert.values[j] !=
        golden::kCatalogHilbert[opt.rank - 13][j]) {
      match = false;
      diff += " hilbert[" + std::to_string(j) + "]";
    }
  }
  if (static_cast<int>(entry.certificate.rank) != opt.rank) diff += " rank";
  if (!entry.certificate.is_extreme) diff += " is_extreme";
  if (!entry.certificate.dual_variety_criterion) diff += " dual_criterion";

  if (opt.format == "json")
    std::cout << construction_to_json(entry.construction, entry.certificate)
              << "\n";
  else
    print_certificate_summary(entry.certificate);
  if (!match) {
    std::cerr << "mismatch against expected values:" << diff << "\n";
    return kExitCertificationFailure;
  }
  return kExitOk;
}

int cmd_exceptional(const Options& opt) {
  if (opt.from < 4 || opt.to < opt.from) {
    std::cerr << "error: range must satisfy 4 <= from <= to\n";
    return kExitUsage;
  }
  std::vector<int> computed;
  for (int d = opt.from; d <= opt.to; ++d)
    if (is_exceptional(d)) computed.push_back(d);

  std::string json = "{\n  \"from\": " + std::to_string(opt.from) +
                     ",\n  \"to\": " + std::to_string(opt.to) +
                     ",\n  \"exceptional\": [";
  for (std::size_t i = 0; i < computed.size(); ++i)
    json += (i ? ", " : "") + std::to_string(computed[i]);
  json += "]\n}\n";
  const fs::path dir = resolve_output_dir(opt);
  write_file(dir / ("exceptional_" + std::to_string(opt.from) + "_" +
                    std::to_string(opt.to) + ".json"),
             json);
  std::cout << json;

  // Compare against the embedded table on the covered range.
  std::vector<int> expected;
  for (int d : golden::kExceptionalDegrees)
    if (d >= opt.from && d <= opt.to) expected.push_back(d);
  std::vector<int> comparable;
  for (int d : computed)
    if (d <= 100) comparable.push_back(d);
  if (opt.to <= 100 && comparable != expected) {
    std::cerr << "mismatch against the embedded table\n";
    return kExitCertificationFailure;
  }
  return kExitOk;
}

int cmd_diesel(const Options& opt) {
  if (opt.from < 4 || opt.to < opt.from) {
    std::cerr << "error: range must satisfy 4 <= from <= to\n";
    return kExitUsage;
  }
  const fs::path dir = resolve_output_dir(opt);
  bool match = true;
  for (int d = opt.from; d <= opt.to; ++d) {
    const Corank4Report report = corank4_dimension_bounds(d);
    write_file(dir / ("diesel_d" + std::to_string(d) + ".json"),
               corank4_report_to_json(report));
    if (opt.format == "json")
      std::cout << corank4_report_to_json(report) << "\n";
    else
      std::cout << "d=" << d << ": h_EM(T1)=" << report.t1.h_em
                << " h_EM(T2)=" << report.t2.h_em
                << " dim_bound(T1)=" << report.t1.dim_bound
                << " codim(T1)>=" << report.t1.codim_bound
                << " codim(T2)>=" << report.t2.codim_bound << "\n";
    if (report.t1.h_em != golden::h_em_t1(d) ||
        report.t2.h_em != golden::h_em_t2(d) ||
        report.t1.dim_bound != golden::t1_dim_bound(d) ||
        report.t1.codim_bound < 10 ||
        report.t2.codim_bound < golden::t2_codim_bound(d)) {
      std::cerr << "d=" << d << ": mismatch against expected counts\n";
      match = false;
    }
  }
  return match ? kExitOk : kExitCertificationFailure;
}

int cmd_self_test(const Options& opt) {
  std::cout << "golden data version " << golden::kDataVersion << ", seed "
            << opt.seed << "\n";
  const auto results = accept::run_all(opt.seed, std::cout);
  return accept::all_passed(results) ? kExitOk : kExitCertificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "hankelray: exact construction and certification of extreme rays of "
      "the dual cone to sums of squares of ternary forms"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--output-dir", opt.output_dir,
                 "output directory (default: $HANKELRAY_OUTPUT_DIR or .)");
  app.add_option("--format", opt.format, "stdout format: json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}));

  auto* construct = app.add_subcommand(
      "construct", "build and certify the corank-4 ray for a degree d");
  construct->add_option("--d", opt.d, "form degree d (>= 4)")->required();
  std::int64_t remove_index = -1;
  construct->add_option("--remove-index", remove_index,
                        "index of the removed point in Gamma_1 (canonical "
                        "order; default: last)");

  auto* certify_cmd = app.add_subcommand(
      "certify", "certify a functional loaded from a JSON file");
  certify_cmd->add_option("--input", opt.input_path, "functional JSON file")
      ->required();

  auto* relation = app.add_subcommand(
      "relation", "export the unique degree-d relation on the split grid");
  relation->add_option("--d", opt.d, "form degree d (>= 4)")->required();

  auto* catalog = app.add_subcommand(
      "catalog-d5", "build one of the five d = 5 constructions");
  catalog->add_option("--rank", opt.rank, "target Hankel rank (13..17)")
      ->required();

  auto* exceptional = app.add_subcommand(
      "exceptional", "scan a degree range for extra conic grid points");
  exceptional->add_option("--from", opt.from, "first degree (>= 4)");
  exceptional->add_option("--to", opt.to, "last degree");

  auto* diesel = app.add_subcommand(
      "diesel", "degree-sequence dimension counts for the corank-4 families");
  diesel->add_option("--d", opt.d, "single degree d (>= 4)");
  diesel->add_option("--from", opt.from, "first degree (>= 4)");
  diesel->add_option("--to", opt.to, "last degree");

  auto* self_test = app.add_subcommand(
      "self-test", "run the embedded verification suite");
  self_test->add_option("--seed", opt.seed, "seed for the property suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (construct->parsed()) {
      if (opt.d < 4) {
        std::cerr << "error: construct requires --d >= 4\n";
        return kExitUsage;
      }
      if (remove_index >= 0)
        opt.remove_index = static_cast<std::size_t>(remove_index);
      return cmd_construct(opt);
    }
    if (certify_cmd->parsed()) return cmd_certify(opt);
    if (relation->parsed()) {
      if (opt.d < 4) {
        std::cerr << "error: relation requires --d >= 4\n";
        return kExitUsage;
      }
      return cmd_relation(opt);
    }
    if (catalog->parsed()) {
      if (opt.rank < 13 || opt.rank > 17) {
        std::cerr << "error: catalog-d5 requires --rank in 13..17\n";
        return kExitUsage;
      }
      return cmd_catalog(opt);
    }
    if (exceptional->parsed()) return cmd_exceptional(opt);
    if (diesel->parsed()) {
      if (diesel->count("--d") > 0) {
        if (opt.d < 4) {
          std::cerr << "error: diesel requires --d >= 4\n";
          return kExitUsage;
        }
        opt.from = opt.d;
        opt.to = opt.d;
      } else if (diesel->count("--from") == 0 && diesel->count("--to") == 0) {
        std::cerr << "error: diesel requires --d or --from/--to\n";
        return kExitUsage;
      }
      return cmd_diesel(opt);
    }
    if (self_test->parsed()) return cmd_self_test(opt);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}
