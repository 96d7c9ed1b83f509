#include "dcnet/enumerate.hpp"

#include <stdexcept>
#include <vector>

#include "dcnet/outcome.hpp"

namespace dcnet {

static Weight pow3(int e) {
  Weight w = 1;
  for (int i = 0; i < e; ++i) w *= 3;
  return w;
}

Weight view_weight_scale() {
  return (Weight(1) << kMaxBitDraws) * pow3(kMaxTernaryDraws);
}

bool same_distribution(const ViewDistribution& a, const ViewDistribution& b) {
  return a.weight == b.weight;
}

static Weight leaf_weight(const std::vector<ChoiceLog::Entry>& entries) {
  int bits = 0;
  int ternaries = 0;
  for (const ChoiceLog::Entry& e : entries) {
    if (e.domain == 2) ++bits;
    else ++ternaries;
  }
  if (bits > kMaxBitDraws || ternaries > kMaxTernaryDraws)
    throw ConfigError("draw sequence too deep for exact view weights");
  return (Weight(1) << (kMaxBitDraws - bits)) * pow3(kMaxTernaryDraws - ternaries);
}

/// Enumerates the subtree below a pinned prefix into `dist`.
static void enumerate_subtree(const ExhaustiveRun& run, const std::vector<ChoiceLog::Entry>& prefix,
                              uint64_t max_leaves, ViewDistribution& dist) {
  auto log = std::make_shared<ChoiceLog>();
  log->pin_prefix(prefix);
  do {
    log->rewind();
    std::string view = run(log);
    if (++dist.leaves > max_leaves)
      throw ConfigError("exhaustive tape space exceeds the assignment limit");
    Weight w = leaf_weight(log->entries());
    dist.weight[view] += w;
    dist.total += w;
  } while (log->advance(prefix.size()));
}

ViewDistribution enumerate_views(const ExhaustiveRun& run, uint64_t max_leaves) {
  ViewDistribution dist;
  enumerate_subtree(run, {}, max_leaves, dist);
  if (dist.total != view_weight_scale())
    throw std::logic_error("view weights do not sum to the scale");
  return dist;
}

/// Collects the distinct choice prefixes of length up to `depth_left`,
/// probing each branch with one run to learn its draw domains.
static void discover_prefixes(const ExhaustiveRun& run, std::vector<ChoiceLog::Entry> prefix,
                              int depth_left, std::vector<std::vector<ChoiceLog::Entry>>& out) {
  auto log = std::make_shared<ChoiceLog>();
  log->pin_prefix(prefix);
  run(log);
  if (depth_left == 0 || log->entries().size() <= prefix.size()) {
    out.push_back(std::move(prefix));
    return;
  }
  uint32_t domain = log->entries()[prefix.size()].domain;
  for (uint32_t v = 0; v < domain; ++v) {
    std::vector<ChoiceLog::Entry> next = prefix;
    next.push_back({domain, v});
    discover_prefixes(run, std::move(next), depth_left - 1, out);
  }
}

ViewDistribution enumerate_views_parallel(const ExhaustiveRun& run, uint64_t max_leaves,
                                          int prefix_depth) {
  std::vector<std::vector<ChoiceLog::Entry>> prefixes;
  discover_prefixes(run, {}, prefix_depth, prefixes);

  std::vector<ViewDistribution> parts(prefixes.size());
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
  for (size_t i = 0; i < prefixes.size(); ++i) {
    try {
      enumerate_subtree(run, prefixes[i], max_leaves, parts[i]);
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  ViewDistribution dist;
  for (ViewDistribution& part : parts) {
    dist.leaves += part.leaves;
    dist.total += part.total;
    for (auto& [view, w] : part.weight) dist.weight[view] += w;
  }
  if (dist.leaves > max_leaves)
    throw ConfigError("exhaustive tape space exceeds the assignment limit");
  if (dist.total != view_weight_scale())
    throw std::logic_error("view weights do not sum to the scale");
  return dist;
}

}  // namespace dcnet
