#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>

#include "test_support.hpp"

using testsupport::fixture_path;
using testsupport::fresh_temp_dir;
using testsupport::read_file;
using testsupport::run_cli;
using testsupport::write_file;

TEST_CASE("poly command") {
  auto r0 = run_cli("poly --n 0");
  CHECK(r0.exit_code == 0);
  CHECK(r0.output == "1\n");

  auto r1 = run_cli("poly --n 1 --alpha 1");
  CHECK(r1.exit_code == 0);
  CHECK(r1.output == "x - 1/2\n");

  auto r2 = run_cli("poly --n 2");
  CHECK(r2.exit_code == 0);
  CHECK(r2.output == "x^2 - a*x + (1/4*a^2 - 1/4*a)\n");

  // byte-stable across runs
  CHECK(run_cli("poly --n 2").output == r2.output);

  auto latex = run_cli("poly --n 2 --format latex");
  CHECK(latex.exit_code == 0);
  CHECK(latex.output ==
        "x^{2} - \\alpha x + \\left(\\frac{1}{4} \\alpha^{2} - \\frac{1}{4} \\alpha\\right)\n");

  auto js = run_cli("poly --n 2 --format json");
  CHECK(js.exit_code == 0);
  auto parsed = nlohmann::json::parse(js.output);
  CHECK(parsed["n"] == 2);
  CHECK(parsed["alpha"].is_null());
  CHECK(parsed["text"] == "x^2 - a*x + (1/4*a^2 - 1/4*a)");

  CHECK(run_cli("poly --n -3").exit_code == 2);
  CHECK(run_cli("poly --n 2 --alpha 1/0").exit_code == 2);
  CHECK(run_cli("poly --n 2 --format yaml").exit_code == 2);
}

TEST_CASE("numbers command") {
  auto gen = run_cli("numbers --kind genocchi --upto 6");
  CHECK(gen.exit_code == 0);
  CHECK(gen.output == "1 1\n2 -1\n3 0\n4 1\n5 0\n6 -3\n");

  auto eul = run_cli("numbers --kind euler --upto 4");
  CHECK(eul.exit_code == 0);
  CHECK(eul.output == "0 1\n1 0\n2 -1\n3 0\n4 5\n");

  CHECK(run_cli("numbers --kind euler --upto 0").exit_code == 2);
  CHECK(run_cli("numbers --kind fibonacci --upto 3").exit_code == 2);

  auto js = run_cli("numbers --kind euler --upto 4 --format json");
  CHECK(js.exit_code == 0);
  auto parsed = nlohmann::json::parse(js.output);
  CHECK(parsed["values"].size() == 5);
  CHECK(parsed["values"][4]["value"] == "5");
}

TEST_CASE("verify command exit codes and reports") {
  auto dir = fresh_temp_dir("cli_verify");
  auto out_path = (dir / "report.json").string();

  auto ok = run_cli("verify --identity thm1 --max 1 --lambda 0,1 --out " + out_path);
  CHECK(ok.exit_code == 0);
  CHECK(ok.output.find("identity thm1: 32 points, 32 holds, 0 fails") != std::string::npos);
  auto report = nlohmann::json::parse(read_file(out_path));
  CHECK(report["reports"].size() == 32);
  CHECK(report["fails"] == 0);
  CHECK(report["summary"]["thm1"]["holds"] == 32);

  // odd r filtered automatically for cor3
  auto cor3 = run_cli("verify --identity cor3 --max 4");
  CHECK(cor3.exit_code == 0);
  CHECK(cor3.output.find("15 points, 15 holds") != std::string::npos);

  CHECK(run_cli("verify --identity bogus").exit_code == 2);
  CHECK(run_cli("verify --identity thm1 --lambda 1/x").exit_code == 2);
  CHECK(run_cli("verify").exit_code == 2);

  auto multi = run_cli("verify --identity prop_e0,lemma2_r8 --max 4");
  CHECK(multi.exit_code == 0);
  CHECK(multi.output.find("identity prop_e0") != std::string::npos);
  CHECK(multi.output.find("identity lemma2_r8") != std::string::npos);
  std::filesystem::remove_all(dir);
}

TEST_CASE("oeis command") {
  auto euler5 = run_cli("oeis --seq A000364 --bfile " + fixture_path("b000364.txt").string() +
                        " --count 5");
  CHECK(euler5.exit_code == 0);
  CHECK(euler5.output.find("1385") != std::string::npos);
  CHECK(euler5.output.find("MISMATCH") == std::string::npos);

  auto gen12 = run_cli("oeis --seq A036968 --bfile " + fixture_path("b036968.txt").string() +
                       " --count 12");
  CHECK(gen12.exit_code == 0);
  CHECK(gen12.output.find("MISMATCH") == std::string::npos);

  CHECK(run_cli("oeis --seq A000045 --bfile " + fixture_path("b000364.txt").string() +
                " --count 3")
            .exit_code == 2);

  auto dir = fresh_temp_dir("cli_oeis");
  write_file(dir / "bad.txt", "0 1\n1 1\n2 6\n");
  auto mismatch =
      run_cli("oeis --seq A000364 --bfile " + (dir / "bad.txt").string() + " --count 3");
  CHECK(mismatch.exit_code == 1);
  CHECK(mismatch.output.find("MISMATCH") != std::string::npos);
  CHECK(mismatch.output.find("index 2") != std::string::npos);

  write_file(dir / "comments.txt", "# nothing here\n");
  auto nodata =
      run_cli("oeis --seq A000364 --bfile " + (dir / "comments.txt").string() + " --count 3");
  CHECK(nodata.exit_code == 1);
  CHECK(nodata.output.find("no data") != std::string::npos);

  write_file(dir / "short.txt", "0 1\n1 1\n");
  CHECK(run_cli("oeis --seq A000364 --bfile " + (dir / "short.txt").string() + " --count 5")
            .exit_code == 1);

  write_file(dir / "broken.txt", "0 1\nx 3\n");
  CHECK(run_cli("oeis --seq A000364 --bfile " + (dir / "broken.txt").string() + " --count 2")
            .exit_code == 2);
  std::filesystem::remove_all(dir);
}

TEST_CASE("cache command round trip and table-backed verify") {
  auto dir = fresh_temp_dir("cli_cache");
  auto build = run_cli("cache --build 24 --dir " + dir.string());
  CHECK(build.exit_code == 0);
  auto table_path = dir / "eulerkit-table-N24.txt";
  REQUIRE(std::filesystem::exists(table_path));
  CHECK(read_file(table_path).rfind("eulerkit-table v1 N=24\ne[0] = 1\n", 0) == 0);

  auto verify = run_cli("verify --identity thm1 --max 2 --lambda 1 --table " + table_path.string());
  CHECK(verify.exit_code == 0);

  // depth too small for the requested grid: usage errors, exit 2
  auto small = run_cli("cache --build 4 --dir " + dir.string());
  CHECK(small.exit_code == 0);
  auto shallow = run_cli("verify --identity thm1 --max 2 --lambda 1 --table " +
                         (dir / "eulerkit-table-N4.txt").string());
  CHECK(shallow.exit_code == 2);
  CHECK(shallow.output.find("ERROR") != std::string::npos);

  // corrupt one coefficient: still well-formed, so it loads and FAILS
  std::string text = read_file(table_path);
  auto pos = text.find("e[3] = ");
  REQUIRE(pos != std::string::npos);
  auto line_end = text.find('\n', pos);
  text.replace(pos, line_end - pos, "e[3] = 0,1/8,3/8,-1/8");
  auto bad_path = dir / "corrupted.txt";
  write_file(bad_path, text);
  auto mutated = run_cli("verify --identity thm1 --max 2 --lambda 1 --table " + bad_path.string());
  CHECK(mutated.exit_code == 1);
  CHECK(mutated.output.find("FAILS") != std::string::npos);

  // truncated cache file: format error
  write_file(dir / "truncated.txt", text.substr(0, text.find("e[2]")));
  CHECK(run_cli("verify --identity thm1 --max 1 --table " + (dir / "truncated.txt").string())
            .exit_code == 2);
  std::filesystem::remove_all(dir);
}
