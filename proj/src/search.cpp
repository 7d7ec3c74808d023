#include "pbc/search.hpp"

#include "pbc/construction.hpp"
#include "pbc/fitting.hpp"
#include "pbc/sampling.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <limits>
#include <thread>

namespace pbc {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string status_of(const Error& e) {
  switch (e.code()) {
    case ErrorCode::Conhyperspherical: return "collapsed";
    case ErrorCode::NotInConvexPosition: return "not-convex";
    case ErrorCode::ConjugateAtInfinity: return "conjugate-at-infinity";
    case ErrorCode::NotHomothetic: return "not-homothetic";
    case ErrorCode::HyperbolicCenterNotOrdinary: return "not-ordinary";
    default: return "degenerate";
  }
}

std::string number(double v) {
  if (!std::isfinite(v)) return "NA";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string point_list(const Configuration& c) {
  std::string out;
  for (Eigen::Index i = 0; i < c.size(); ++i) {
    if (i) out += ';';
    for (Eigen::Index k = 0; k < c.points.rows(); ++k) {
      if (k) out += ' ';
      out += number(c.points(k, i));
    }
  }
  return out;
}

void ratio_dependence(ExperimentRecord& r, sampling::Rng& rng, double tolerance) {
  sampling::EuclideanOptions opts;
  opts.simple = r.dim == 2;
  r.first = sampling::euclidean(rng, r.dim, opts);
  r.volumes.assign(3, kNaN);
  r.ratios.assign(2, kNaN);
  r.ratio_difference = r.perspectivity_residual = r.homothety_ratio = kNaN;
  r.homothety_center = Vector<double>::Constant(r.dim, kNaN);

  const Configuration n2 = next_generation(r.first);
  const Configuration n3 = next_generation(n2);
  const Configuration* gens[] = {&r.first, &n2, &n3};
  // keep the first failure but still report every volume that exists
  std::optional<Error> failure;
  for (int k = 0; k < 3; ++k) {
    try {
      r.volumes[k] = polytope_volume(*gens[k]).volume;
    } catch (const Error& e) {
      if (!failure) failure = e;
    }
  }
  r.ratios[0] = r.volumes[0] / r.volumes[1];
  r.ratios[1] = r.volumes[1] / r.volumes[2];
  r.ratio_difference = std::abs(r.ratios[0] - r.ratios[1]) /
                       std::max(std::abs(r.ratios[0]), std::abs(r.ratios[1]));

  const auto fit = perspectivity(r.first, n3);
  r.perspectivity_residual = fit.max_line_residual / fit.scale;
  const auto h = homothety(r.first, n3, tolerance);
  r.homothety_ratio = h.ratio;
  r.homothety_center = h.center;
  if (failure) throw *failure;
}

void cyclic_second_generation(ExperimentRecord& r, sampling::Rng& rng, double tolerance) {
  r.first_deviation = r.second_deviation = r.reconstruction_error = kNaN;
  Configuration seed = sampling::cyclic(rng, r.dim);
  seed.generation = 2;
  r.first = prev_generation(seed);

  const auto report = degeneracy_report(r.first, tolerance);
  if (!report.dependent_subsets.empty())
    throw Error(ErrorCode::Degenerate, "N(1) has an affinely dependent subset");
  r.first_deviation = report.deviation;
  const Configuration again = next_generation(r.first);
  r.second_deviation = conhyperspherical_deviation(again);
  r.reconstruction_error = (again.points - seed.points).colwise().norm().maxCoeff() / diameter(seed);
  r.witness = !report.conhyperspherical && r.second_deviation <= tolerance;
}

}  // namespace

std::string_view to_string(SearchMode m) {
  switch (m) {
    case SearchMode::RatioDependence: return "ratio-dependence";
    case SearchMode::CyclicSecondGen: return "cyclic-secondgen";
  }
  return "?";
}

std::optional<SearchMode> parse_search_mode(std::string_view name) {
  if (name == "ratio-dependence") return SearchMode::RatioDependence;
  if (name == "cyclic-secondgen") return SearchMode::CyclicSecondGen;
  return std::nullopt;
}

ExperimentRecord run_trial(const SearchOptions& options, std::uint64_t trial) {
  ExperimentRecord r;
  r.trial = trial;
  r.seed = options.seed;
  r.dim = options.dim;
  auto rng = sampling::trial_rng(options.seed, trial);
  try {
    if (options.mode == SearchMode::RatioDependence)
      ratio_dependence(r, rng, options.tolerance);
    else
      cyclic_second_generation(r, rng, options.tolerance);
    r.status = "ok";
  } catch (const Error& e) {
    r.status = status_of(e);
    r.message = e.what();
    r.witness = false;
  }
  r.first.seed = options.seed;
  r.first.label = std::string(to_string(options.mode)) + " trial " + std::to_string(trial);
  return r;
}

SearchResult run_search(const SearchOptions& options) {
  if (options.dim < 2) throw Error(ErrorCode::ValidationError, "dim must be at least 2");
  if (options.mode == SearchMode::RatioDependence && options.dim > 3)
    throw Error(ErrorCode::UnsupportedDimension, "volumes are computed for d = 2 and d = 3");

  SearchResult result;
  result.options = options;
  result.records.resize(options.trials);

  unsigned workers = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, std::max<std::uint64_t>(1, options.trials)));
  std::atomic<std::uint64_t> next{0};
  auto work = [&] {
    for (std::uint64_t t = next++; t < options.trials; t = next++) result.records[t] = run_trial(options, t);
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  double best_difference = -1;
  for (std::size_t i = 0; i < result.records.size(); ++i) {
    const auto& r = result.records[i];
    if (options.mode == SearchMode::CyclicSecondGen) {
      if (r.witness) {
        ++result.witnesses;
        if (!result.best) result.best = i;
      }
    } else if (r.status == "ok" && r.ratio_difference > best_difference) {
      best_difference = r.ratio_difference;
      result.best = i;
    }
  }
  return result;
}

std::vector<std::string> csv_columns(SearchMode mode, int dim) {
  std::vector<std::string> cols = {"trial", "seed", "dim", "status"};
  if (mode == SearchMode::RatioDependence) {
    for (const char* c : {"volume1", "volume2", "volume3", "ratio12", "ratio23", "ratio_difference",
                          "perspectivity_residual", "homothety_ratio"})
      cols.emplace_back(c);
    for (int k = 1; k <= dim; ++k) cols.push_back("center" + std::to_string(k));
  } else {
    for (const char* c : {"witness", "n1_deviation", "n2_deviation", "reconstruction_error"})
      cols.emplace_back(c);
  }
  cols.emplace_back("message");
  cols.emplace_back("n1_points");
  return cols;
}

std::string csv_field(std::string_view text) {
  if (text.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(text);
  std::string out = "\"";
  for (char ch : text) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

void write_csv(std::ostream& out, const SearchResult& result) {
  const auto& opts = result.options;
  const auto cols = csv_columns(opts.mode, opts.dim);
  for (std::size_t k = 0; k < cols.size(); ++k) out << (k ? "," : "") << cols[k];
  out << "\r\n";
  for (const auto& r : result.records) {
    std::vector<std::string> row = {std::to_string(r.trial), std::to_string(r.seed), std::to_string(r.dim),
                                    r.status};
    if (opts.mode == SearchMode::RatioDependence) {
      for (int k = 0; k < 3; ++k) row.push_back(number(k < static_cast<int>(r.volumes.size()) ? r.volumes[k] : kNaN));
      for (int k = 0; k < 2; ++k) row.push_back(number(k < static_cast<int>(r.ratios.size()) ? r.ratios[k] : kNaN));
      row.push_back(number(r.ratio_difference));
      row.push_back(number(r.perspectivity_residual));
      row.push_back(number(r.homothety_ratio));
      for (int k = 0; k < opts.dim; ++k)
        row.push_back(number(k < r.homothety_center.size() ? r.homothety_center(k) : kNaN));
    } else {
      row.push_back(r.witness ? "1" : "0");
      row.push_back(number(r.first_deviation));
      row.push_back(number(r.second_deviation));
      row.push_back(number(r.reconstruction_error));
    }
    row.push_back(r.message);
    row.push_back(r.first.size() ? point_list(r.first) : "");
    for (std::size_t k = 0; k < row.size(); ++k) out << (k ? "," : "") << csv_field(row[k]);
    out << "\r\n";
  }
}

}  // namespace pbc
