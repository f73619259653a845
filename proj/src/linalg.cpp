#include "minrep/linalg.hpp"

#include <algorithm>

namespace minrep::linalg {

SparseVec::SparseVec(std::vector<Entry> entries)
{
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  for (auto& e : entries) {
    if (!entries_.empty() && entries_.back().first == e.first) {
      entries_.back().second += e.second;
    } else {
      if (!entries_.empty() && entries_.back().second == 0) entries_.pop_back();
      entries_.push_back(std::move(e));
    }
  }
  if (!entries_.empty() && entries_.back().second == 0) entries_.pop_back();
}

SparseVec::SparseVec(const std::map<std::uint32_t, Rat>& m)
{
  entries_.reserve(m.size());
  for (const auto& [k, v] : m)
    if (v != 0) entries_.emplace_back(k, v);
}

Rat SparseVec::at(std::uint32_t index) const
{
  auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                             [](const Entry& e, std::uint32_t i) { return e.first < i; });
  if (it != entries_.end() && it->first == index) return it->second;
  return 0;
}

void SparseVec::axpy(const Rat& c, const SparseVec& other)
{
  if (c == 0 || other.empty()) return;
  std::vector<Entry> out;
  out.reserve(entries_.size() + other.entries_.size());
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() || b != other.entries_.end()) {
    if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
      out.push_back(std::move(*a));
      ++a;
    } else if (a == entries_.end() || b->first < a->first) {
      out.emplace_back(b->first, c * b->second);
      ++b;
    } else {
      Rat v = a->second + c * b->second;
      if (v != 0) out.emplace_back(a->first, std::move(v));
      ++a;
      ++b;
    }
  }
  entries_ = std::move(out);
}

void SparseVec::scale(const Rat& c)
{
  if (c == 0) {
    entries_.clear();
    return;
  }
  for (auto& e : entries_) e.second *= c;
}

SparseVec EchelonBasis::reduce(SparseVec v) const
{
  // Rows only carry indices >= their pivot, so one ascending sweep suffices.
  std::size_t pos = 0;
  while (pos < v.size()) {
    auto idx = v.entries()[pos].first;
    auto row = rows_.find(idx);
    if (row == rows_.end()) {
      ++pos;
      continue;
    }
    Rat c = -v.entries()[pos].second;
    v.axpy(c, row->second);
    // The pivot entry is gone; entries before pos are untouched.
  }
  return v;
}

bool EchelonBasis::insert(SparseVec v)
{
  v = reduce(std::move(v));
  if (v.empty()) return false;
  insert_reduced(std::move(v));
  return true;
}

void EchelonBasis::insert_reduced(SparseVec v)
{
  Rat inv = 1 / v.entries().front().second;
  v.scale(inv);
  auto pivot = v.leading_index();
  rows_.emplace(pivot, std::move(v));
}

namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(DenseMatrix& m, std::size_t cols)
{
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    Rat inv = 1 / m[r][c];
    for (std::size_t j = c; j < m[r].size(); ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rat f = m[i][c];
      for (std::size_t j = c; j < m[i].size(); ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

} // namespace

std::size_t rank(DenseMatrix m)
{
  if (m.empty()) return 0;
  return rref(m, m.front().size()).size();
}

std::vector<std::vector<Rat>> nullspace(DenseMatrix m, std::size_t cols)
{
  auto pivots = rref(m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Rat>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rat> x(cols, Rat(0));
    x[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -m[r][free];
    basis.push_back(std::move(x));
  }
  return basis;
}

bool solve_affine(DenseMatrix m, std::vector<Rat> rhs, std::size_t cols,
                  std::vector<Rat>& particular, std::vector<std::vector<Rat>>& kernel)
{
  for (std::size_t i = 0; i < m.size(); ++i) m[i].push_back(rhs[i]);
  auto pivots = rref(m, cols);
  for (std::size_t r = pivots.size(); r < m.size(); ++r)
    if (m[r][cols] != 0) return false;
  particular.assign(cols, Rat(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) particular[pivots[r]] = m[r][cols];
  for (auto& row : m) row.pop_back();
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  kernel.clear();
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rat> x(cols, Rat(0));
    x[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -m[r][free];
    kernel.push_back(std::move(x));
  }
  return true;
}

DenseMatrix zeros(std::size_t rows, std::size_t cols)
{
  return DenseMatrix(rows, std::vector<Rat>(cols, Rat(0)));
}

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b)
{
  std::size_t rows = a.size();
  std::size_t inner = b.size();
  std::size_t cols = inner ? b.front().size() : 0;
  auto out = zeros(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

DenseMatrix add(const DenseMatrix& a, const DenseMatrix& b)
{
  auto out = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) out[i][j] += b[i][j];
  return out;
}

DenseMatrix scaled(const DenseMatrix& a, const Rat& c)
{
  auto out = a;
  for (auto& row : out)
    for (auto& x : row) x *= c;
  return out;
}

std::vector<Rat> apply(const DenseMatrix& a, std::span<const Rat> x)
{
  std::vector<Rat> y(a.size(), Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j)
      if (a[i][j] != 0 && x[j] != 0) y[i] += a[i][j] * x[j];
  return y;
}

} // namespace minrep::linalg
