#include "minrep/closure.hpp"

#include "minrep/parallel.hpp"

#include <deque>

namespace minrep {

using linalg::SparseVec;

std::vector<std::pair<WeightKey, SparseVec>> split_by_weight(const SparseVec& v, const GradedAction& g)
{
  std::map<WeightKey, std::vector<SparseVec::Entry>> parts;
  for (const auto& e : v.entries()) parts[g.weight_of_index(e.first)].push_back(e);
  std::vector<std::pair<WeightKey, SparseVec>> out;
  for (auto& [w, es] : parts) out.emplace_back(w, SparseVec(std::move(es)));
  return out;
}

SparseVec GradedSpan::reduce(const WeightKey& w, SparseVec v) const
{
  auto it = pieces_.find(w);
  if (it == pieces_.end()) return v;
  return it->second.reduce(std::move(v));
}

void GradedSpan::insert_reduced(const WeightKey& w, SparseVec v) { pieces_[w].insert_reduced(std::move(v)); }

std::vector<SparseVec> GradedSpan::insert(const SparseVec& v, const GradedAction& g)
{
  std::vector<SparseVec> added;
  for (auto& [w, part] : split_by_weight(v, g)) {
    auto r = reduce(w, part);
    if (r.empty()) continue;
    added.push_back(r);
    insert_reduced(w, std::move(r));
  }
  return added;
}

bool GradedSpan::contains(const SparseVec& v, const GradedAction& g) const
{
  for (auto& [w, part] : split_by_weight(v, g))
    if (!reduce(w, part).empty()) return false;
  return true;
}

std::size_t GradedSpan::rank() const
{
  std::size_t r = 0;
  for (const auto& [w, e] : pieces_) r += e.rank();
  return r;
}

std::size_t GradedSpan::rank_at(const WeightKey& w) const
{
  auto it = pieces_.find(w);
  return it == pieces_.end() ? 0 : it->second.rank();
}

std::vector<SparseVec> GradedSpan::basis() const
{
  std::vector<SparseVec> out;
  for (const auto& [w, e] : pieces_)
    for (const auto& [pivot, row] : e.rows()) out.push_back(row);
  return out;
}

GradedSpan closure_serial(const std::vector<SparseVec>& seeds, const GradedAction& g)
{
  GradedSpan span;
  std::deque<SparseVec> queue;
  for (const auto& s : seeds)
    for (auto& row : span.insert(s, g)) queue.push_back(std::move(row));
  while (!queue.empty()) {
    SparseVec v = std::move(queue.front());
    queue.pop_front();
    for (std::size_t k = 0; k < g.generator_count; ++k) {
      auto image = g.act(k, v);
      if (image.empty()) continue;
      for (auto& row : span.insert(image, g)) queue.push_back(std::move(row));
    }
  }
  return span;
}

GradedSpan closure_parallel(const std::vector<SparseVec>& seeds, const GradedAction& g)
{
  GradedSpan span;
  std::vector<SparseVec> frontier;
  for (const auto& s : seeds)
    for (auto& row : span.insert(s, g)) frontier.push_back(std::move(row));

  const int workers = worker_count();
  while (!frontier.empty()) {
    const std::size_t gens = g.generator_count;
    const long tasks = static_cast<long>(frontier.size() * gens);
    std::vector<std::pair<WeightKey, SparseVec>> images(tasks);

#pragma omp parallel for schedule(dynamic, 4) num_threads(workers)
    for (long t = 0; t < tasks; ++t) {
      const auto& v = frontier[static_cast<std::size_t>(t) / gens];
      auto image = g.act(static_cast<std::size_t>(t) % gens, v);
      if (image.empty()) continue;
      // generator images of homogeneous vectors are homogeneous
      WeightKey w = g.weight_of_index(image.leading_index());
      images[t] = {w, span.reduce(w, std::move(image))};
    }

    std::vector<SparseVec> next;
    for (auto& [w, r] : images) {
      if (r.empty()) continue;
      r = span.reduce(w, std::move(r));
      if (r.empty()) continue;
      next.push_back(r);
      span.insert_reduced(w, std::move(r));
    }
    frontier = std::move(next);
  }
  return span;
}

bool is_stable(const GradedSpan& span, const GradedAction& g)
{
  auto rows = span.basis();
  for (const auto& v : rows)
    for (std::size_t k = 0; k < g.generator_count; ++k)
      if (!span.contains(g.act(k, v), g)) return false;
  return true;
}

} // namespace minrep
