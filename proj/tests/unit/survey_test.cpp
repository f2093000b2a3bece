#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"

#include "gib/completeness.hpp"
#include "gib/survey.hpp"
#include "oracles.hpp"

using gib::i64;
using gib::modulus;

TEST_CASE("first_n_primes produces the ascending primes") {
  CHECK(gib::first_n_primes(1) == std::vector<i64>{2});
  CHECK(gib::first_n_primes(20).back() == 71);
  CHECK(gib::first_n_primes(100).back() == 541);
  CHECK(gib::first_n_primes(300).back() == 1987);
  const auto primes = gib::first_n_primes(200);
  REQUIRE(primes.size() == 200);
  for (std::size_t i = 0; i < primes.size(); ++i) {
    REQUIRE(oracles::is_prime(primes[i]));
    if (i) REQUIRE(primes[i] > primes[i - 1]);
  }
  CHECK_THROWS_AS(gib::first_n_primes(0), std::invalid_argument);
}

TEST_CASE("run_survey matches the reference spot facts") {
  const auto a2 = gib::run_survey(gib::validate_seed({1, 1, 1}), 1);
  REQUIRE(a2.size() == 1);
  CHECK(a2[0].prime == 2);
  CHECK_FALSE(a2[0].complete);
  CHECK(a2[0].cycle_length == 1);

  const auto b2 = gib::run_survey(gib::validate_seed({1, 1, 2}), 1);
  CHECK(b2[0].complete);
  CHECK(b2[0].cycle_length == 4);

  const auto t123 = gib::run_survey(gib::validate_seed({1, 2, 3}), 20);
  const auto at67 = std::find_if(t123.begin(), t123.end(),
                                 [](const auto& r) { return r.prime == 67; });
  REQUIRE(at67 != t123.end());
  CHECK_FALSE(at67->complete);
}

TEST_CASE("survey verdicts agree with is_complete") {
  const gib::seed s = gib::validate_seed({1, 1, 1});
  const auto records = gib::run_survey(s, 25);
  for (const auto& r : records) {
    const auto report = gib::is_complete(s, modulus(r.prime));
    REQUIRE(r.complete == report.complete);
    REQUIRE(r.cycle_length == report.cycle_length);
  }
}

TEST_CASE("bucketize groups records and accumulates totals") {
  std::vector<gib::survey_record> records;
  for (i64 i = 0; i < 7; ++i) {
    records.push_back({i * 10 + 2, i % 2 == 0, 5});
  }
  const auto table = gib::bucketize(records, 3);
  REQUIRE(table.buckets.size() == 3);
  CHECK(table.buckets[0].size == 3);
  CHECK(table.buckets[2].size == 1);  // trailing partial bucket
  CHECK(table.buckets[0].complete == 2);
  CHECK(table.buckets[0].first_prime == 2);
  CHECK(table.buckets[0].last_prime == 22);
  CHECK(table.cumulative[2].complete == table.total_complete);
  CHECK(table.cumulative[2].size == 7);
  CHECK(table.total == 7);
  CHECK(table.total_complete == 4);

  const auto single = gib::bucketize(records, 100);
  REQUIRE(single.buckets.size() == 1);
  CHECK(single.buckets[0].complete == 4);

  const auto empty = gib::bucketize({}, 10);
  CHECK(empty.buckets.empty());
  CHECK(empty.total == 0);

  CHECK_THROWS_AS(gib::bucketize(records, 0), std::invalid_argument);
}

TEST_CASE("percentages are rounded to one decimal place") {
  std::vector<gib::survey_record> records;
  for (i64 i = 0; i < 300; ++i) records.push_back({i, i < 184, 1});
  const auto table = gib::bucketize(records, 300);
  CHECK(table.buckets[0].percent == 61.3);
}

TEST_CASE("CSV export is the documented byte format") {
  std::ostringstream out;
  gib::write_survey_csv({{2, true, 4}}, out);
  CHECK(out.str() == "prime,complete,cycle_length\n2,true,4\n");

  std::ostringstream empty;
  gib::write_survey_csv({}, empty);
  CHECK(empty.str() == "prime,complete,cycle_length\n");
}

TEST_CASE("JSON export is the documented byte format") {
  const gib::seed s = gib::validate_seed({1, 1, 2});
  const std::vector<gib::survey_record> records{{2, true, 4}};
  const auto table = gib::bucketize(records, 20);
  std::ostringstream out;
  gib::write_survey_json(s, records, table, out);
  CHECK(out.str() ==
        "{\"seed\":[1,1,2],\"order\":3,\"records\":[{\"prime\":2,"
        "\"complete\":true,\"cycle_length\":4}],\"buckets\":[{\"first_prime\":"
        "2,\"last_prime\":2,\"size\":1,\"complete\":1,\"percent\":100.0}],"
        "\"total_complete\":1}\n");
}

TEST_CASE("surveys are deterministic and independent of the worker count") {
  const gib::seed s = gib::validate_seed({1, 1, 2});
  gib::survey_options serial;
  serial.jobs = 1;
  gib::survey_options parallel;
  parallel.jobs = 4;
  const auto r1 = gib::run_survey(s, 40, serial);
  const auto r2 = gib::run_survey(s, 40, parallel);
  const auto r3 = gib::run_survey(s, 40, parallel);

  const auto render = [&](const std::vector<gib::survey_record>& records) {
    std::ostringstream out;
    gib::write_survey_json(s, records, gib::bucketize(records, 20), out);
    return out.str();
  };
  CHECK(render(r1) == render(r2));
  CHECK(render(r2) == render(r3));
}

TEST_CASE("the per-prime step budget raises resource_limit") {
  gib::survey_options tight;
  tight.step_budget = 10;
  CHECK_THROWS_AS(gib::run_survey(gib::validate_seed({1, 1, 2}), 20, tight),
                  gib::resource_limit);
}

TEST_CASE("export_survey writes files and reports io failures") {
  const gib::seed s = gib::validate_seed({1, 1, 2});
  const std::vector<gib::survey_record> records{{2, true, 4}, {3, true, 13}};
  const auto table = gib::bucketize(records, 20);

  const auto path = std::filesystem::temp_directory_path() / "gib_survey_test.csv";
  gib::export_survey(s, records, table, gib::export_format::csv, path);
  std::ifstream in(path, std::ios::binary);
  std::stringstream content;
  content << in.rdbuf();
  CHECK(content.str() ==
        "prime,complete,cycle_length\n2,true,4\n3,true,13\n");
  std::filesystem::remove(path);

  CHECK_THROWS_AS(gib::export_survey(s, records, table,
                                     gib::export_format::csv,
                                     "/nonexistent_dir/survey.csv"),
                  gib::io_error);
}

TEST_CASE("primes 1 or 9 mod 10 have short Fibonacci cycles and are defective") {
  for (const i64 p : gib::first_n_primes(100)) {
    if (p % 10 != 1 && p % 10 != 9) continue;
    const i64 h = gib::period(gib::fibonacci_seed(), modulus(p));
    REQUIRE((p - 1) % h == 0);
    REQUIRE(h < p);
    REQUIRE_FALSE(gib::is_complete(gib::fibonacci_seed(), modulus(p)).complete);
  }
}
