#include "rankone/rootsys.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

namespace rankone {

namespace {

std::vector<int> zero_vec(int n) { return std::vector<int>(n, 0); }

void check_index(int i, int n) {
  if (i < 1 || i > n) throw std::invalid_argument("index out of range");
}

// Simple reflection s_k acting on eps coordinates: s_k (k < n) swaps
// coordinates k, k+1; s_n negates coordinate n.
void apply_reflection(std::vector<int>& v, int k) {
  const int n = static_cast<int>(v.size());
  if (k < n)
    std::swap(v[k - 1], v[k]);
  else
    v[n - 1] = -v[n - 1];
}

// Coxeter element c = s_1 s_2 ... s_n: eps_i -> eps_{i+1}, eps_n -> -eps_1.
std::vector<int> apply_coxeter(const std::vector<int>& v) {
  const int n = static_cast<int>(v.size());
  std::vector<int> w(n, 0);
  w[0] = -v[n - 1];
  for (int i = 1; i < n; ++i) w[i] = v[i - 1];
  return w;
}

std::vector<int> alpha_eps(int i, int n) {
  std::vector<int> v = zero_vec(n);
  if (i < n) {
    v[i - 1] = 1;
    v[i] = -1;
  } else {
    v[n - 1] = 2;
  }
  return v;
}

}  // namespace

AlmostPositiveRoot AlmostPositiveRoot::negative_simple(int i, Rank n) {
  check_index(i, n.n);
  auto v = alpha_eps(i, n.n);
  for (int& x : v) x = -x;
  return from_eps(std::move(v));
}

AlmostPositiveRoot AlmostPositiveRoot::eps_diff(int i, int j, Rank n) {
  check_index(i, n.n);
  check_index(j, n.n);
  if (i >= j) throw std::invalid_argument("eps_diff requires i < j");
  auto v = zero_vec(n.n);
  v[i - 1] = 1;
  v[j - 1] = -1;
  return from_eps(std::move(v));
}

AlmostPositiveRoot AlmostPositiveRoot::eps_sum(int i, int j, Rank n) {
  check_index(i, n.n);
  check_index(j, n.n);
  if (i >= j) throw std::invalid_argument("eps_sum requires i < j");
  auto v = zero_vec(n.n);
  v[i - 1] = 1;
  v[j - 1] = 1;
  return from_eps(std::move(v));
}

AlmostPositiveRoot AlmostPositiveRoot::two_eps(int i, Rank n) {
  check_index(i, n.n);
  auto v = zero_vec(n.n);
  v[i - 1] = 2;
  return from_eps(std::move(v));
}

AlmostPositiveRoot AlmostPositiveRoot::from_eps(std::vector<int> eps) {
  const int n = static_cast<int>(eps.size());
  if (n < 2) throw std::invalid_argument("rank must be >= 2");
  std::vector<std::pair<int, int>> nz;  // (1-based index, value)
  for (int i = 0; i < n; ++i)
    if (eps[i] != 0) nz.emplace_back(i + 1, eps[i]);

  AlmostPositiveRoot r;
  r.eps_ = std::move(eps);
  if (nz.size() == 1) {
    auto [i, v] = nz[0];
    if (v == 2) {
      r.kind_ = RootKind::TwoEps;
      r.i_ = i;
      return r;
    }
    if (v == -2 && i == n) {
      r.kind_ = RootKind::NegativeSimple;
      r.i_ = n;
      return r;
    }
  } else if (nz.size() == 2) {
    auto [i, vi] = nz[0];
    auto [j, vj] = nz[1];
    if (vi == 1 && vj == 1) {
      r.kind_ = RootKind::EpsSum;
      r.i_ = i;
      r.j_ = j;
      return r;
    }
    if (vi == 1 && vj == -1) {
      r.kind_ = RootKind::EpsDiff;
      r.i_ = i;
      r.j_ = j;
      return r;
    }
    if (vi == -1 && vj == 1 && j == i + 1) {
      r.kind_ = RootKind::NegativeSimple;
      r.i_ = i;
      return r;
    }
  }
  throw std::invalid_argument("not an almost positive root of type C_n");
}

std::string AlmostPositiveRoot::str() const {
  const int n = static_cast<int>(eps_.size());
  switch (kind_) {
    case RootKind::NegativeSimple:
      if (i_ == n) return "-2e" + std::to_string(n);
      return "-e" + std::to_string(i_) + "+e" + std::to_string(i_ + 1);
    case RootKind::EpsDiff:
      return "e" + std::to_string(i_) + "-e" + std::to_string(j_);
    case RootKind::EpsSum:
      return "e" + std::to_string(i_) + "+e" + std::to_string(j_);
    case RootKind::TwoEps:
      return "2e" + std::to_string(i_);
  }
  return "";
}

std::vector<AlmostPositiveRoot> almost_positive_roots(Rank n) {
  std::vector<AlmostPositiveRoot> roots;
  roots.reserve(static_cast<std::size_t>(n.n) * (n.n + 1));
  for (int row = 1; row <= n.n + 1; ++row)
    for (int col = 1; col <= n.n + 1; ++col)
      if (row != col) roots.push_back(from_array_position({row, col}, n));
  return roots;
}

ArrayPosition to_array_position(const AlmostPositiveRoot& r, Rank n) {
  if (static_cast<int>(r.eps().size()) != n.n)
    throw std::invalid_argument("rank mismatch");
  switch (r.kind()) {
    case RootKind::NegativeSimple:
      return {1, r.index_i() == n.n ? n.n + 1 : r.index_i() + 1};
    case RootKind::TwoEps:
      return {r.index_i() + 1, r.index_i()};
    case RootKind::EpsSum:
      return {r.index_j() + 1, r.index_i()};
    case RootKind::EpsDiff:
      return {r.index_i() + 1, r.index_j() + 1};
  }
  throw std::logic_error("unreachable");
}

AlmostPositiveRoot from_array_position(ArrayPosition p, Rank n) {
  const int size = n.n + 1;
  if (p.row < 1 || p.row > size || p.col < 1 || p.col > size)
    throw std::invalid_argument("array position out of range");
  if (p.row == p.col)
    throw std::invalid_argument("array position on the diagonal");
  if (p.row == 1) {
    if (p.col == size) return AlmostPositiveRoot::negative_simple(n.n, n);
    return AlmostPositiveRoot::negative_simple(p.col - 1, n);
  }
  if (p.col < p.row) {
    const int j = p.col, i = p.row - 1;  // eps_j + eps_i with j <= i
    if (j == i) return AlmostPositiveRoot::two_eps(j, n);
    return AlmostPositiveRoot::eps_sum(j, i, n);
  }
  return AlmostPositiveRoot::eps_diff(p.row - 1, p.col - 1, n);
}

AlmostPositiveRoot tau(const AlmostPositiveRoot& r, Rank n) {
  ArrayPosition p = to_array_position(r, n);
  const int size = n.n + 1;
  return from_array_position({p.row % size + 1, p.col % size + 1}, n);
}

AlmostPositiveRoot tau_by_definition(const AlmostPositiveRoot& r, Rank n) {
  if (r.is_negative_simple()) {
    // tau(-alpha_i) = s_1 s_2 ... s_{i-1}(alpha_i)
    std::vector<int> v = alpha_eps(r.index_i(), n.n);
    for (int k = r.index_i() - 1; k >= 1; --k) apply_reflection(v, k);
    return AlmostPositiveRoot::from_eps(std::move(v));
  }
  // tau(s_n ... s_{i+1}(alpha_i)) = -alpha_i; those roots are eps_i + eps_n
  // (i < n) and 2 eps_n.
  if (r.kind() == RootKind::TwoEps && r.index_i() == n.n)
    return AlmostPositiveRoot::negative_simple(n.n, n);
  if (r.kind() == RootKind::EpsSum && r.index_j() == n.n)
    return AlmostPositiveRoot::negative_simple(r.index_i(), n);
  return AlmostPositiveRoot::from_eps(apply_coxeter(r.eps()));
}

std::vector<std::vector<AlmostPositiveRoot>> tau_orbits(Rank n) {
  std::vector<std::vector<AlmostPositiveRoot>> orbits;
  for (int i = 1; i <= n.n; ++i) {
    std::vector<AlmostPositiveRoot> orbit;
    AlmostPositiveRoot r = AlmostPositiveRoot::negative_simple(i, n);
    for (int k = 0; k <= n.n; ++k) {
      orbit.push_back(r);
      r = tau(r, n);
    }
    assert(r == orbit.front());
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

std::vector<int> simple_root_coefficients(const AlmostPositiveRoot& r,
                                          Rank n) {
  std::vector<int> c(n.n, 0);
  switch (r.kind()) {
    case RootKind::NegativeSimple:
      c[r.index_i() - 1] = -1;
      break;
    case RootKind::EpsDiff:
      for (int k = r.index_i(); k < r.index_j(); ++k) c[k - 1] = 1;
      break;
    case RootKind::EpsSum:
      for (int k = r.index_i(); k < r.index_j(); ++k) c[k - 1] = 1;
      for (int k = r.index_j(); k < n.n; ++k) c[k - 1] = 2;
      c[n.n - 1] += 1;
      break;
    case RootKind::TwoEps:
      for (int k = r.index_i(); k < n.n; ++k) c[k - 1] = 2;
      c[n.n - 1] += 1;
      break;
  }
  return c;
}

int compatibility_degree(const AlmostPositiveRoot& a,
                         const AlmostPositiveRoot& b, Rank n) {
  AlmostPositiveRoot x = a, y = b;
  for (int step = 0; step <= n.n; ++step) {
    if (x.is_negative_simple()) {
      if (y.is_negative_simple()) return 0;
      return simple_root_coefficients(y, n)[x.index_i() - 1];
    }
    x = tau(x, n);
    y = tau(y, n);
  }
  throw std::logic_error("tau orbit did not reach a negative simple root");
}

bool is_compatible(const AlmostPositiveRoot& a, const AlmostPositiveRoot& b,
                   Rank n) {
  return compatibility_degree(a, b, n) == 0;
}

bool is_compatible_positional(const AlmostPositiveRoot& a,
                              const AlmostPositiveRoot& b, Rank n) {
  ArrayPosition pa = to_array_position(a, n);
  ArrayPosition pb = to_array_position(b, n);
  if (pa.row == pb.row || pa.col == pb.col) return true;

  const int k = std::min(pa.row, pb.row), m = std::max(pa.row, pb.row);
  const int i = std::min(pa.col, pb.col), j = std::max(pa.col, pb.col);
  // A 2x2 submatrix meeting the diagonal: the pair spans an (r,s)/(s,t)
  // configuration, which is never compatible.
  if (k == i || k == j || m == i || m == j) return false;

  const bool main_diagonal =
      (pa.row == k) ? (pa.col == i) : (pb.col == i);  // pair sits at (k,i),(m,j)
  if (main_diagonal) return (k < i && i < m) || (i < k && m < j);
  return (k < i && m < i) || (i < k && k < j && j < m) || (k > j);
}

AlmostPositiveRoot parse_root(const std::string& s, Rank n) {
  std::size_t pos = 0;
  auto fail = [&]() -> void {
    throw std::invalid_argument("cannot parse root string '" + s + "'");
  };
  auto peek = [&]() -> char { return pos < s.size() ? s[pos] : '\0'; };
  auto take_int = [&]() -> int {
    std::size_t start = pos;
    while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
    if (pos == start) fail();
    return std::stoi(s.substr(start, pos - start));
  };

  bool neg = false;
  if (peek() == '-') {
    neg = true;
    ++pos;
  }
  if (peek() == 'a') {
    ++pos;
    int i = take_int();
    if (pos != s.size() || !neg) fail();
    if (i < 1 || i > n.n) fail();
    return AlmostPositiveRoot::negative_simple(i, n);
  }
  if (peek() == '2') {
    ++pos;
    if (peek() != 'e') fail();
    ++pos;
    int i = take_int();
    if (pos != s.size()) fail();
    if (i < 1 || i > n.n) fail();
    std::vector<int> v(n.n, 0);
    v[i - 1] = neg ? -2 : 2;
    return AlmostPositiveRoot::from_eps(std::move(v));
  }
  if (peek() != 'e') fail();
  ++pos;
  int i = take_int();
  char sign = peek();
  if (sign != '+' && sign != '-') fail();
  ++pos;
  if (peek() != 'e') fail();
  ++pos;
  int j = take_int();
  if (pos != s.size()) fail();
  if (i < 1 || i > n.n || j < 1 || j > n.n || i == j) fail();
  std::vector<int> v(n.n, 0);
  v[i - 1] = neg ? -1 : 1;
  v[j - 1] = sign == '+' ? 1 : -1;
  return AlmostPositiveRoot::from_eps(std::move(v));
}

std::vector<AlmostPositiveRoot> compat_table_roots(Rank n) {
  std::vector<AlmostPositiveRoot> table;
  for (int i = 1; i <= n.n; ++i)
    table.push_back(AlmostPositiveRoot::negative_simple(i, n));

  std::vector<std::pair<std::vector<int>, AlmostPositiveRoot>> positives;
  for (const auto& r : almost_positive_roots(n)) {
    if (!r.is_positive()) continue;
    positives.emplace_back(simple_root_coefficients(r, n), r);
  }
  std::sort(positives.begin(), positives.end(),
            [](const auto& a, const auto& b) {
              int ha = std::accumulate(a.first.begin(), a.first.end(), 0);
              int hb = std::accumulate(b.first.begin(), b.first.end(), 0);
              if (ha != hb) return ha < hb;
              return a.first > b.first;
            });
  for (auto& [c, r] : positives) table.push_back(r);
  return table;
}

}  // namespace rankone
