#pragma once

// Monte Carlo search over random configurations, reported as CSV.
//
//   ratio-dependence   random Euclidean configurations; volumes of the first
//                      three generations and the two consecutive ratios
//   cyclic-secondgen   random conhyperspherical N^(2), reversed to N^(1);
//                      a witness has N^(1) nondegenerate and not
//                      conhyperspherical while next(N^(1)) is

#include "pbc/configuration.hpp"

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace pbc {

enum class SearchMode { RatioDependence, CyclicSecondGen };

std::string_view to_string(SearchMode m);
std::optional<SearchMode> parse_search_mode(std::string_view name);

struct SearchOptions {
  SearchMode mode{SearchMode::RatioDependence};
  int dim{3};
  std::uint64_t trials{100};
  std::uint64_t seed{1};
  unsigned threads{0};  // 0: hardware concurrency
  double tolerance{tol::kVerify};
};

struct ExperimentRecord {
  std::uint64_t trial{0};
  std::uint64_t seed{0};
  int dim{0};
  std::string status;
  std::string message;

  // ratio-dependence
  std::vector<double> volumes;  // |P^(1)|, |P^(2)|, |P^(3)|
  std::vector<double> ratios;   // |P^(1)|/|P^(2)|, |P^(2)|/|P^(3)|
  double ratio_difference{0};   // |r12 - r23| / max(|r12|, |r23|)
  double perspectivity_residual{0};  // N^(1), N^(3); relative to the diameter
  double homothety_ratio{0};
  Vector<double> homothety_center;

  // cyclic-secondgen
  bool witness{false};
  double first_deviation{0};
  double second_deviation{0};
  double reconstruction_error{0};  // |next(N^(1)) - N^(2)| / diameter(N^(2))

  Configuration first;  // N^(1)
};

struct SearchResult {
  SearchOptions options;
  std::vector<ExperimentRecord> records;  // in trial order
  std::size_t witnesses{0};
  // Index of the trial with the most interesting N^(1): the largest ratio
  // difference, or the first witness.
  std::optional<std::size_t> best;
};

ExperimentRecord run_trial(const SearchOptions& options, std::uint64_t trial);

SearchResult run_search(const SearchOptions& options);

/// Column names of the CSV for a mode, in output order.
std::vector<std::string> csv_columns(SearchMode mode, int dim);

void write_csv(std::ostream& out, const SearchResult& result);

/// RFC 4180 field quoting.
std::string csv_field(std::string_view text);

}  // namespace pbc
