#pragma once

#include <filesystem>
#include <iosfwd>
#include <vector>

#include "gib/seed.hpp"

namespace gib {

// The first n primes, ascending, starting at 2.
std::vector<i64> first_n_primes(int n);

struct survey_record {
  i64 prime;
  bool complete;
  i64 cycle_length;
};

struct survey_options {
  int jobs = 0;                         // 0 = one worker per hardware thread
  i64 step_budget = 1'000'000'000;      // per-prime iteration cap
};

// Completeness verdict and cycle length of one sequence mod each of the
// first n primes, in ascending prime order. Work items are independent and
// run on `jobs` workers; the result does not depend on the worker count.
// Throws resource_limit when some cycle does not close within step_budget.
std::vector<survey_record> run_survey(const seed& s, int n_primes,
                                      const survey_options& options = {});

struct survey_bucket {
  i64 first_prime;
  i64 last_prime;
  int size;        // primes in the bucket
  int complete;    // complete verdicts in the bucket
  double percent;  // 100 * complete / size, one decimal place
};

struct survey_table {
  int bucket_size;
  std::vector<survey_bucket> buckets;
  std::vector<survey_bucket> cumulative;  // running totals after each bucket
  int total;
  int total_complete;
};

// Groups records into buckets of bucket_size primes; a final partial bucket
// is reported as-is.
survey_table bucketize(const std::vector<survey_record>& records,
                       int bucket_size);

enum class export_format {
  csv,
  json,
};

// CSV: header `prime,complete,cycle_length`, one record per line, ascending
// primes, lowercase booleans, LF line endings.
void write_survey_csv(const std::vector<survey_record>& records,
                      std::ostream& out);

// JSON object with keys seed, order, records, buckets, total_complete.
// Byte-stable for fixed inputs.
void write_survey_json(const seed& s, const std::vector<survey_record>& records,
                       const survey_table& table, std::ostream& out);

// Writes one of the formats above to a file. Throws io_error on failure.
void export_survey(const seed& s, const std::vector<survey_record>& records,
                   const survey_table& table, export_format format,
                   const std::filesystem::path& destination);

}  // namespace gib
