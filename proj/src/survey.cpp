#include "gib/survey.hpp"

#include <atomic>
#include <cmath>
#include <cstddef>
#include <fstream>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "json.hpp"

#include "gib/recurrence.hpp"

namespace gib {

namespace {

double one_decimal_percent(i64 complete, i64 total) {
  return std::round(1000.0 * static_cast<double>(complete) /
                    static_cast<double>(total)) /
         10.0;
}

}  // namespace

std::vector<i64> first_n_primes(int n) {
  if (n < 1) throw std::invalid_argument("prime count must be at least 1");
  // p_n < n (ln n + ln ln n) for n >= 6; pad generously for small n.
  std::size_t bound = 16;
  if (n >= 6) {
    const double nd = static_cast<double>(n);
    bound = static_cast<std::size_t>(nd * (std::log(nd) + std::log(std::log(nd))) * 1.2) + 16;
  }
  std::vector<i64> primes;
  for (;;) {
    std::vector<bool> composite(bound + 1, false);
    primes.clear();
    for (std::size_t p = 2; p <= bound; ++p) {
      if (composite[p]) continue;
      primes.push_back(static_cast<i64>(p));
      if (primes.size() == static_cast<std::size_t>(n)) return primes;
      for (std::size_t q = p * p; q <= bound; q += p) composite[q] = true;
    }
    bound *= 2;
  }
}

std::vector<survey_record> run_survey(const seed& s, int n_primes,
                                      const survey_options& options) {
  const std::vector<i64> primes = first_n_primes(n_primes);
  std::vector<survey_record> records(primes.size());

  std::atomic<std::size_t> cursor{0};
  std::atomic<bool> over_budget{false};
  auto worker = [&] {
    for (;;) {
      const std::size_t i = cursor.fetch_add(1);
      if (i >= primes.size() || over_budget.load()) return;
      const i64 p = primes[i];
      const auto scan = scan_orbit(state_vector(s, modulus(p)),
                                   options.step_budget);
      if (!scan) {
        over_budget.store(true);
        return;
      }
      records[i] = survey_record{p, scan->residues_covered == p, scan->length};
    }
  };

  int jobs = options.jobs > 0
                 ? options.jobs
                 : static_cast<int>(
                       std::max(1u, std::thread::hardware_concurrency()));
  jobs = std::min(jobs, static_cast<int>(primes.size()));
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(static_cast<std::size_t>(jobs));
    for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
  }
  if (over_budget.load()) {
    throw resource_limit("a cycle did not close within " +
                         std::to_string(options.step_budget) + " steps");
  }
  return records;
}

survey_table bucketize(const std::vector<survey_record>& records,
                       int bucket_size) {
  if (bucket_size < 1) {
    throw std::invalid_argument("bucket size must be at least 1");
  }
  survey_table table;
  table.bucket_size = bucket_size;
  table.total = static_cast<int>(records.size());
  table.total_complete = 0;

  int done = 0;
  int running_complete = 0;
  while (done < table.total) {
    const int size = std::min(bucket_size, table.total - done);
    int complete = 0;
    for (int i = done; i < done + size; ++i) {
      if (records[static_cast<std::size_t>(i)].complete) ++complete;
    }
    const survey_bucket bucket{records[static_cast<std::size_t>(done)].prime,
                               records[static_cast<std::size_t>(done + size - 1)].prime,
                               size, complete,
                               one_decimal_percent(complete, size)};
    table.buckets.push_back(bucket);
    running_complete += complete;
    done += size;
    table.cumulative.push_back({records[0].prime, bucket.last_prime, done,
                                running_complete,
                                one_decimal_percent(running_complete, done)});
  }
  table.total_complete = running_complete;
  return table;
}

void write_survey_csv(const std::vector<survey_record>& records,
                      std::ostream& out) {
  out << "prime,complete,cycle_length\n";
  for (const auto& r : records) {
    out << r.prime << ',' << (r.complete ? "true" : "false") << ','
        << r.cycle_length << '\n';
  }
}

void write_survey_json(const seed& s, const std::vector<survey_record>& records,
                       const survey_table& table, std::ostream& out) {
  nlohmann::ordered_json doc;
  doc["seed"] = s.terms();
  doc["order"] = s.order();
  auto record_rows = nlohmann::ordered_json::array();
  for (const auto& r : records) {
    nlohmann::ordered_json row;
    row["prime"] = r.prime;
    row["complete"] = r.complete;
    row["cycle_length"] = r.cycle_length;
    record_rows.push_back(std::move(row));
  }
  doc["records"] = std::move(record_rows);
  auto bucket_rows = nlohmann::ordered_json::array();
  for (const auto& b : table.buckets) {
    nlohmann::ordered_json row;
    row["first_prime"] = b.first_prime;
    row["last_prime"] = b.last_prime;
    row["size"] = b.size;
    row["complete"] = b.complete;
    row["percent"] = b.percent;
    bucket_rows.push_back(std::move(row));
  }
  doc["buckets"] = std::move(bucket_rows);
  doc["total_complete"] = table.total_complete;
  out << doc.dump() << '\n';
}

void export_survey(const seed& s, const std::vector<survey_record>& records,
                   const survey_table& table, export_format format,
                   const std::filesystem::path& destination) {
  std::ofstream out(destination, std::ios::binary);
  if (!out) {
    throw io_error("cannot open " + destination.string() + " for writing");
  }
  if (format == export_format::csv) {
    write_survey_csv(records, out);
  } else {
    write_survey_json(s, records, table, out);
  }
  out.flush();
  if (!out) {
    throw io_error("failed while writing " + destination.string());
  }
}

}  // namespace gib
