#include "fdepth/statistics.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "fdepth/error.hpp"

namespace fdepth {
namespace {

void check_n(const DepthResult& result, std::size_t n) {
  if (n < 1 || n > result.entries.size())
    throw Error("n = " + std::to_string(n) + " is out of range (1.." + std::to_string(result.entries.size()) + ")");
}

// First n of `sorted`, plus any following entries tied with the n-th.
std::vector<DepthEntry> take_with_ties(std::vector<DepthEntry> sorted, std::size_t n) {
  std::size_t end = n;
  while (end < sorted.size() && sorted[end].depth == sorted[n - 1].depth) ++end;
  sorted.resize(end);
  return sorted;
}

template <class Sample>
Sample keep_if(const Sample& sample, const std::set<std::string>& ids, bool keep) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < sample.size(); ++i)
    if (ids.contains(sample.id(i)) == keep) idx.push_back(i);
  return sample.subset(idx);
}

std::set<std::string> id_set(const std::vector<DepthEntry>& entries) {
  std::set<std::string> s;
  for (const auto& e : entries) s.insert(e.id);
  return s;
}

template <class Sample>
Sample drop_impl(const Sample& sample, const DepthResult& result, std::size_t n) {
  if (n == 0) return sample;
  const auto gone = id_set(outlying(result, n));
  Sample out = keep_if(sample, gone, false);
  if (out.size() < 1)
    throw Error("dropping the " + std::to_string(n) + " most outlying items would leave an empty sample");
  return out;
}

template <class Sample>
Sample deepest_impl(const Sample& sample, const DepthResult& result, std::size_t n) {
  return keep_if(sample, id_set(deepest(result, n)), true);
}

}  // namespace

std::vector<DepthEntry> ordered(const DepthResult& result) {
  std::vector<DepthEntry> out = result.entries;
  std::sort(out.begin(), out.end(), [](const DepthEntry& a, const DepthEntry& b) {
    if (a.depth != b.depth) return a.depth > b.depth;
    return a.id < b.id;
  });
  return out;
}

std::vector<DepthEntry> deepest(const DepthResult& result, std::size_t n) {
  check_n(result, n);
  return take_with_ties(ordered(result), n);
}

std::vector<DepthEntry> outlying(const DepthResult& result, std::size_t n) {
  check_n(result, n);
  std::vector<DepthEntry> asc = result.entries;
  std::sort(asc.begin(), asc.end(), [](const DepthEntry& a, const DepthEntry& b) {
    if (a.depth != b.depth) return a.depth < b.depth;
    return a.id < b.id;
  });
  return take_with_ties(std::move(asc), n);
}

std::vector<std::string> central_region(const DepthResult& result, double fraction) {
  if (!(fraction > 0.0 && fraction <= 1.0)) throw Error("fraction must be in (0, 1]");
  if (result.entries.empty()) return {};
  const double want = std::ceil(fraction * static_cast<double>(result.entries.size()));
  const auto n = std::clamp<std::size_t>(static_cast<std::size_t>(want), 1, result.entries.size());
  std::vector<std::string> ids;
  for (const auto& e : deepest(result, n)) ids.push_back(e.id);
  return ids;
}

FunctionalSample drop_outlying_data(const FunctionalSample& sample, const DepthResult& result, std::size_t n) {
  return drop_impl(sample, result, n);
}
PointCloud drop_outlying_data(const PointCloud& cloud, const DepthResult& result, std::size_t n) {
  return drop_impl(cloud, result, n);
}

FunctionalSample get_deepest_data(const FunctionalSample& sample, const DepthResult& result, std::size_t n) {
  return deepest_impl(sample, result, n);
}
PointCloud get_deepest_data(const PointCloud& cloud, const DepthResult& result, std::size_t n) {
  return deepest_impl(cloud, result, n);
}

}  // namespace fdepth
