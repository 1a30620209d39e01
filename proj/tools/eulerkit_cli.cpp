// Command-line surface for the eulerkit library: compute polynomials and
// number sequences, run verification grids, cross-check against OEIS b-files
// and manage the coefficient cache.
//
// Exit codes: 0 = all verified/matched, 1 = mathematical mismatch found,
// 2 = usage or format error.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "eulerkit/eulerkit.hpp"
#include "eulerkit/report_json.hpp"

namespace {

using namespace eulerkit;

constexpr std::size_t kDefaultTableDepth = 64;

EulerTable table_for_depth(std::size_t needed) {
  return EulerTable::build(std::max(needed, kDefaultTableDepth));
}

std::optional<AlphaPoly> parse_lambda_token(const std::string& token) {
  if (token == "a") return AlphaPoly::alpha();
  try {
    return AlphaPoly(Rat::from_string(token));
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

std::vector<std::string> split_csv(const std::string& csv) {
  std::vector<std::string> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

nlohmann::json xpoly_coeff_json(const XPoly& p) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : p.coeffs()) {
    nlohmann::json inner = nlohmann::json::array();
    for (const auto& r : c.coeffs()) inner.push_back(r.to_string());
    coeffs.push_back(inner);
  }
  return coeffs;
}

int run_poly(int n, const std::optional<std::string>& alpha_str, const std::string& format) {
  std::optional<Rat> alpha;
  if (alpha_str) {
    try {
      alpha = Rat::from_string(*alpha_str);
    } catch (const std::exception& e) {
      std::cerr << "poly: invalid --alpha value '" << *alpha_str << "': " << e.what() << "\n";
      return 2;
    }
  }
  EulerTable table = table_for_depth(static_cast<std::size_t>(n));
  XPoly p = euler_poly(static_cast<std::size_t>(n), table);
  if (alpha) p = alpha_eval(p, *alpha);
  if (format == "text") {
    std::cout << p.to_string() << "\n";
  } else if (format == "latex") {
    std::cout << xpoly_to_latex(p) << "\n";
  } else {
    nlohmann::json out{{"n", n},
                       {"alpha", alpha ? nlohmann::json(alpha->to_string()) : nlohmann::json(nullptr)},
                       {"text", p.to_string()},
                       {"coeffs_ascending_x", xpoly_coeff_json(p)}};
    std::cout << out.dump(2) << "\n";
  }
  return 0;
}

int run_numbers(const std::string& kind, int upto, const std::string& format) {
  const bool euler = kind == "euler";
  EulerTable table = table_for_depth(static_cast<std::size_t>(upto));
  std::vector<Rat> values = sequence_values(
      euler ? SequenceKind::euler_number : SequenceKind::genocchi_number,
      euler ? static_cast<std::size_t>(upto) + 1 : static_cast<std::size_t>(upto), table);
  const int first_index = euler ? 0 : 1;
  if (format == "json") {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < values.size(); ++i)
      rows.push_back({{"n", first_index + static_cast<int>(i)}, {"value", values[i].to_string()}});
    std::cout << nlohmann::json{{"kind", kind}, {"values", rows}}.dump(2) << "\n";
  } else if (format == "latex") {
    const std::string symbol = euler ? "E" : "G";
    for (std::size_t i = 0; i < values.size(); ++i)
      std::cout << symbol << "_{" << first_index + static_cast<int>(i) << "} &= "
                << values[i].to_string() << " \\\\\n";
  } else {
    for (std::size_t i = 0; i < values.size(); ++i)
      std::cout << first_index + static_cast<int>(i) << " " << values[i].to_string() << "\n";
  }
  return 0;
}

int run_verify(const std::string& identity_csv, std::optional<int> max_bound,
               const std::optional<std::string>& lambda_csv,
               const std::optional<std::string>& out_path,
               const std::optional<std::string>& table_path) {
  std::vector<IdentityId> ids;
  for (const auto& token : split_csv(identity_csv)) {
    if (token == "all") {
      ids = all_identities();
      break;
    }
    auto id = identity_from_tag(token);
    if (!id) {
      std::cerr << "verify: unknown identity tag '" << token << "'\n";
      return 2;
    }
    ids.push_back(*id);
  }
  if (ids.empty()) {
    std::cerr << "verify: no identities selected\n";
    return 2;
  }

  std::optional<std::vector<AlphaPoly>> lambdas;
  if (lambda_csv) {
    lambdas.emplace();
    for (const auto& token : split_csv(*lambda_csv)) {
      auto lam = parse_lambda_token(token);
      if (!lam) {
        std::cerr << "verify: invalid --lambda entry '" << token << "' (expected p/q or 'a')\n";
        return 2;
      }
      lambdas->push_back(*lam);
    }
    if (lambdas->empty()) {
      std::cerr << "verify: --lambda list is empty\n";
      return 2;
    }
  }

  std::vector<std::pair<IdentityId, GridSpec>> runs;
  std::size_t needed_depth = 0;
  for (IdentityId id : ids) {
    GridSpec g = default_grid(id);
    if (max_bound) {
      g.max_n = *max_bound;
      g.max_l = *max_bound;
      g.max_r = *max_bound;
      g.max_s = *max_bound;
    }
    if (lambdas) g.lambdas = *lambdas;
    for (const auto& p : grid_points(id, g))
      needed_depth = std::max(needed_depth, required_table_depth(id, p));
    runs.emplace_back(id, std::move(g));
  }

  std::optional<EulerTable> table;
  if (table_path) {
    try {
      table = cache_load(*table_path);
    } catch (const std::exception& e) {
      std::cerr << "verify: cannot load table: " << e.what() << "\n";
      return 2;
    }
  } else {
    table = table_for_depth(needed_depth);
  }

  VerifyContext ctx(*table);
  GridResult result;
  std::size_t done_before = 0;
  for (const auto& [id, g] : runs) {
    grid_verify_into(id, g, ctx, result);
    const std::size_t count = result.reports.size() - done_before;
    std::size_t holds = 0;
    for (std::size_t i = done_before; i < result.reports.size(); ++i)
      if (result.reports[i].status == VerifyStatus::holds) ++holds;
    std::cout << "identity " << identity_tag(id) << ": " << count << " points, " << holds
              << " holds, " << (count - holds) << " fails\n";
    done_before = result.reports.size();
  }
  std::cout << "total: " << result.reports.size() << " points, " << result.holds << " holds, "
            << result.fails << " fails, " << result.errors.size() << " errors\n";
  for (const auto& rep : result.reports) {
    if (rep.status == VerifyStatus::fails)
      std::cout << "FAILS " << identity_tag(rep.id) << " [" << rep.params.to_string()
                << "] residual = " << rep.residual.to_string() << "\n";
  }
  for (const auto& err : result.errors)
    std::cout << "ERROR " << identity_tag(err.id) << " [" << err.params.to_string() << "] "
              << err.message << "\n";

  if (out_path) {
    std::ofstream out(*out_path, std::ios::binary);
    if (!out) {
      std::cerr << "verify: cannot write report to " << *out_path << "\n";
      return 2;
    }
    out << grid_to_json(result).dump(2) << "\n";
  }

  if (result.fails > 0) return 1;
  if (!result.errors.empty()) return 2;
  return 0;
}

int run_oeis(const std::string& seq, const std::string& bfile_path, int count) {
  if (seq != "A000364" && seq != "A036968") {
    std::cerr << "oeis: unsupported sequence '" << seq << "' (supported: A000364, A036968)\n";
    return 2;
  }
  BFile bfile;
  try {
    bfile = parse_bfile(bfile_path);
  } catch (const ParseError& e) {
    std::cerr << "oeis: malformed b-file: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "oeis: " << e.what() << "\n";
    return 2;
  }
  if (bfile.entries.empty()) {
    std::cerr << "oeis: no data in b-file\n";
    return 1;
  }
  if (bfile.entries.size() < static_cast<std::size_t>(count)) {
    std::cerr << "oeis: b-file holds only " << bfile.entries.size() << " entries, need " << count
              << "\n";
    return 1;
  }

  long long max_index = bfile.entries[static_cast<std::size_t>(count) - 1].index;
  std::size_t depth;
  if (seq == "A000364") {
    if (bfile.entries[0].index < 0) {
      std::cerr << "oeis: A000364 is indexed from 0\n";
      return 2;
    }
    depth = static_cast<std::size_t>(2 * max_index);
  } else {
    if (bfile.entries[0].index < 1) {
      std::cerr << "oeis: A036968 is indexed from 1\n";
      return 2;
    }
    depth = static_cast<std::size_t>(max_index);
  }
  EulerTable table = table_for_depth(depth);
  VerifyContext ctx(table);

  int exit_code = 0;
  std::cout << "index  computed  bfile\n";
  for (int i = 0; i < count; ++i) {
    const auto& entry = bfile.entries[static_cast<std::size_t>(i)];
    // A000364 lists |E_{2n}|; A036968 lists signed G_n with the odd zeros.
    Rat computed;
    if (seq == "A000364") {
      computed = ctx.euler_number(static_cast<std::size_t>(2 * entry.index)).abs();
    } else {
      computed = ctx.genocchi_number(static_cast<std::size_t>(entry.index));
    }
    const bool match = computed.is_integer() && computed.num() == entry.value;
    std::cout << entry.index << "  " << computed.to_string() << "  " << entry.value.to_string()
              << (match ? "  ok" : "  MISMATCH") << "\n";
    if (!match && exit_code == 0) {
      std::cerr << "oeis: first mismatch at index " << entry.index << "\n";
      exit_code = 1;
    }
  }
  return exit_code;
}

int run_cache(int depth, const std::string& dir) {
  std::filesystem::path out_dir(dir);
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) {
    std::cerr << "cache: cannot create directory " << dir << ": " << ec.message() << "\n";
    return 2;
  }
  EulerTable table = EulerTable::build(static_cast<std::size_t>(depth));
  std::filesystem::path path = out_dir / ("eulerkit-table-N" + std::to_string(depth) + ".txt");
  cache_store(table, path);
  std::cout << "wrote " << path.string() << " (N=" << depth << ")\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"eulerkit: exact generalized Euler polynomial engine and identity verifier"};
  app.require_subcommand(1);

  // poly
  auto* poly_cmd = app.add_subcommand("poly", "print E_n^(a)(x), symbolically or at a rational a");
  int poly_n = 0;
  std::string poly_alpha;
  std::string poly_format = "text";
  poly_cmd->add_option("--n", poly_n, "polynomial index")->required()->check(CLI::NonNegativeNumber);
  auto* alpha_opt = poly_cmd->add_option("--alpha", poly_alpha, "rational order p/q (default: symbolic)");
  poly_cmd->add_option("--format", poly_format, "output format")
      ->check(CLI::IsMember({"text", "latex", "json"}));

  // numbers
  auto* numbers_cmd = app.add_subcommand("numbers", "print Euler or Genocchi numbers");
  std::string numbers_kind;
  int numbers_upto = 0;
  std::string numbers_format = "text";
  numbers_cmd->add_option("--kind", numbers_kind, "sequence kind")
      ->required()
      ->check(CLI::IsMember({"euler", "genocchi"}));
  numbers_cmd->add_option("--upto", numbers_upto, "largest index (>= 1)")->required();
  numbers_cmd->add_option("--format", numbers_format, "output format")
      ->check(CLI::IsMember({"text", "latex", "json"}));

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "run identity verification grids");
  std::string verify_ids;
  int verify_max = -1;
  std::string verify_lambda;
  std::string verify_out;
  std::string verify_table;
  verify_cmd->add_option("--identity", verify_ids, "comma-separated identity tags, or 'all'")->required();
  auto* max_opt = verify_cmd->add_option("--max", verify_max, "override grid bound for n, l, r, s");
  auto* lambda_opt =
      verify_cmd->add_option("--lambda", verify_lambda, "comma-separated scalar slot values (p/q or 'a')");
  auto* out_opt = verify_cmd->add_option("--out", verify_out, "write the JSON report here");
  auto* table_opt = verify_cmd->add_option("--table", verify_table, "verify against a cached table file");

  // oeis
  auto* oeis_cmd = app.add_subcommand("oeis", "cross-check computed sequences against an OEIS b-file");
  std::string oeis_seq;
  std::string oeis_bfile;
  int oeis_count = 0;
  oeis_cmd->add_option("--seq", oeis_seq, "sequence id (A000364 or A036968)")->required();
  oeis_cmd->add_option("--bfile", oeis_bfile, "path to the b-file")->required();
  oeis_cmd->add_option("--count", oeis_count, "number of entries to check")->required();

  // cache
  auto* cache_cmd = app.add_subcommand("cache", "build and store a coefficient table");
  int cache_n = -1;
  std::string cache_dir;
  cache_cmd->add_option("--build", cache_n, "table depth N")->required()->check(CLI::NonNegativeNumber);
  cache_cmd->add_option("--dir", cache_dir, "output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*poly_cmd) {
      std::optional<std::string> alpha =
          alpha_opt->count() ? std::optional<std::string>(poly_alpha) : std::nullopt;
      return run_poly(poly_n, alpha, poly_format);
    }
    if (*numbers_cmd) {
      if (numbers_upto < 1) {
        std::cerr << "numbers: --upto must be at least 1\n";
        return 2;
      }
      return run_numbers(numbers_kind, numbers_upto, numbers_format);
    }
    if (*verify_cmd) {
      return run_verify(verify_ids,
                        max_opt->count() ? std::optional<int>(verify_max) : std::nullopt,
                        lambda_opt->count() ? std::optional<std::string>(verify_lambda) : std::nullopt,
                        out_opt->count() ? std::optional<std::string>(verify_out) : std::nullopt,
                        table_opt->count() ? std::optional<std::string>(verify_table) : std::nullopt);
    }
    if (*oeis_cmd) {
      if (oeis_count < 1) {
        std::cerr << "oeis: --count must be at least 1\n";
        return 2;
      }
      return run_oeis(oeis_seq, oeis_bfile, oeis_count);
    }
    if (*cache_cmd) return run_cache(cache_n, cache_dir);
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
