#include "twist/root_system.hpp"

#include <algorithm>
#include <numeric>

namespace twist {

namespace {

int ht(const Root& r) { return std::accumulate(r.coeffs.begin(), r.coeffs.end(), 0); }

bool all_nonneg(const Root& r) {
  return std::all_of(r.coeffs.begin(), r.coeffs.end(), [](int c) { return c >= 0; });
}

bool all_nonpos(const Root& r) {
  return std::all_of(r.coeffs.begin(), r.coeffs.end(), [](int c) { return c <= 0; });
}

Root negate(const Root& r) {
  Root n = r;
  for (int& c : n.coeffs) c = -c;
  return n;
}

}  // namespace

RootSystemType RootSystemType::parse(const std::string& text) {
  if (text.size() < 2) fail(Errc::ValidationError, "bad root system type: " + text);
  RootSystemType t;
  t.family = text[0];
  try {
    t.rank = std::stoi(text.substr(1));
  } catch (const std::exception&) {
    fail(Errc::ValidationError, "bad root system type: " + text);
  }
  return t;
}

bool DiagramSymmetry::is_identity() const {
  for (std::size_t i = 0; i < perm.size(); ++i)
    if (perm[i] != int(i)) return false;
  return true;
}

RootSystem RootSystem::build(RootSystemType type) {
  const int l = type.rank;
  auto admissible = [&]() {
    switch (type.family) {
      case 'A': return l >= 1;
      case 'B': return l >= 2;
      case 'C': return l >= 2;
      case 'D': return l >= 4;
      case 'E': return l >= 6 && l <= 8;
      case 'F': return l == 4;
      case 'G': return l == 2;
      default: return false;
    }
  };
  if (!admissible()) fail(Errc::InadmissibleRank, "inadmissible type " + type.str());

  RootSystem rs;
  rs.type_ = type;
  rs.cartan_.assign(l, std::vector<int>(l, 0));
  rs.d_.assign(l, 1);
  auto& A = rs.cartan_;
  for (int i = 0; i < l; ++i) A[i][i] = 2;
  auto chain_edge = [&](int i, int j) { A[i][j] = A[j][i] = -1; };  // 0-based

  switch (type.family) {
    case 'A':
      for (int i = 0; i + 1 < l; ++i) chain_edge(i, i + 1);
      break;
    case 'B':  // last simple root short
      for (int i = 0; i + 2 < l; ++i) chain_edge(i, i + 1);
      A[l - 2][l - 1] = -2;
      A[l - 1][l - 2] = -1;
      for (int i = 0; i + 1 < l; ++i) rs.d_[i] = 2;
      break;
    case 'C':  // last simple root long
      for (int i = 0; i + 2 < l; ++i) chain_edge(i, i + 1);
      A[l - 2][l - 1] = -1;
      A[l - 1][l - 2] = -2;
      rs.d_[l - 1] = 2;
      break;
    case 'D':
      for (int i = 0; i + 3 < l; ++i) chain_edge(i, i + 1);
      chain_edge(l - 3, l - 2);
      chain_edge(l - 3, l - 1);
      break;
    case 'E':
      chain_edge(0, 2);
      chain_edge(2, 3);
      chain_edge(1, 3);
      for (int i = 3; i + 1 < l; ++i) chain_edge(i, i + 1);
      break;
    case 'F':
      chain_edge(0, 1);
      A[1][2] = -2;
      A[2][1] = -1;
      chain_edge(2, 3);
      rs.d_[0] = rs.d_[1] = 2;
      break;
    case 'G':
      A[0][1] = -1;
      A[1][0] = -3;
      rs.d_[1] = 3;
      break;
  }

  // Generate the positive roots by closing upward through root strings: for a
  // known root beta, beta + alpha_i is a root iff p - <beta, alpha_i> > 0
  // where p counts how far the string extends downward.
  std::map<std::vector<int>, int> seen;
  std::vector<Root> roots;
  for (int i = 0; i < l; ++i) {
    Root r;
    r.coeffs.assign(l, 0);
    r.coeffs[i] = 1;
    seen.emplace(r.coeffs, 1);
    roots.push_back(r);
  }
  for (std::size_t k = 0; k < roots.size(); ++k) {
    Root beta = roots[k];
    for (int i = 0; i < l; ++i) {
      int pair = 0;
      for (int j = 0; j < l; ++j) pair += beta.coeffs[j] * A[j][i];
      int p = 0;
      Root down = beta;
      for (;;) {
        down.coeffs[i] -= 1;
        if (ht(down) == 0 || !seen.count(down.coeffs)) break;
        ++p;
      }
      if (p - pair > 0) {
        Root up = beta;
        up.coeffs[i] += 1;
        if (seen.emplace(up.coeffs, 1).second) roots.push_back(up);
      }
    }
  }

  std::sort(roots.begin(), roots.end(), [](const Root& a, const Root& b) {
    int ha = ht(a), hb = ht(b);
    if (ha != hb) return ha < hb;
    return a.coeffs > b.coeffs;
  });
  rs.positive_ = std::move(roots);
  for (std::size_t i = 0; i < rs.positive_.size(); ++i)
    rs.index_.emplace(rs.positive_[i].coeffs, int(i));

  const int N = rs.count();
  std::size_t expected = 0;
  switch (type.family) {
    case 'A': expected = std::size_t(l) * (l + 1) / 2; break;
    case 'B':
    case 'C': expected = std::size_t(l) * l; break;
    case 'D': expected = std::size_t(l) * (l - 1); break;
    case 'E': expected = l == 6 ? 36 : l == 7 ? 63 : 120; break;
    case 'F': expected = 24; break;
    case 'G': expected = 6; break;
  }
  if (std::size_t(N) != expected)
    fail(Errc::ValidationError, "positive root count mismatch for " + type.str());

  // Height blocks.
  for (int i = 1; i <= N; ++i) {
    int h = ht(rs.root(i));
    if (rs.heights_.empty() || rs.heights_.back() != h) {
      rs.heights_.push_back(h);
      rs.blocks_.emplace_back();
    }
    rs.blocks_.back().push_back(i);
  }

  // The ordering conventions for the last three roots.
  const Root& top = rs.root(N);
  auto minus_simple = [&](int i, int times) {
    Root r = top;
    r.coeffs[i - 1] -= times;
    return r;
  };
  if (type.family == 'A' && l >= 2) {
    if (!(rs.root(N - 2) == minus_simple(l, 1) && rs.root(N - 1) == minus_simple(1, 1)))
      fail(Errc::ValidationError, "type A ordering convention violated");
  } else if (N >= 3) {
    int special = 0;
    for (int i = 1; i <= l; ++i)
      if (rs.is_positive_root(minus_simple(i, 1))) {
        special = i;
        break;
      }
    if (!(rs.root(N - 1) == minus_simple(special, 1)))
      fail(Errc::ValidationError, "ordering convention for alpha_{N-1} violated");
    // alpha_{N-2} = alpha_N - 2 alpha_i is pinned for family C only; in
    // B_2 = C_2 built as family B it would clash with the diagram order of
    // the simple roots.
    if (type.family == 'C' && rs.is_positive_root(minus_simple(special, 2)) &&
        !(rs.root(N - 2) == minus_simple(special, 2)))
      fail(Errc::ValidationError, "type C ordering convention for alpha_{N-2} violated");
  }

  // Diagram symmetries: Cartan-preserving permutations of the simple roots.
  std::vector<int> perm(l);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < l && ok; ++i)
      for (int j = 0; j < l && ok; ++j)
        if (A[perm[i]][perm[j]] != A[i][j]) ok = false;
    if (!ok) continue;
    DiagramSymmetry s;
    s.perm = perm;
    s.induced_perm.resize(N);
    for (int idx = 0; idx < N; ++idx) {
      Root img;
      img.coeffs.assign(l, 0);
      for (int i = 0; i < l; ++i) img.coeffs[perm[i]] = rs.positive_[idx].coeffs[i];
      auto it = rs.index_.find(img.coeffs);
      if (it == rs.index_.end()) { ok = false; break; }
      s.induced_perm[idx] = it->second;
    }
    if (ok) rs.symmetries_.push_back(std::move(s));
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::sort(rs.symmetries_.begin(), rs.symmetries_.end(),
            [](const DiagramSymmetry& a, const DiagramSymmetry& b) { return a.perm < b.perm; });
  for (const auto& s : rs.symmetries_)
    if (s.induced_perm[N - 1] != N - 1)
      fail(Errc::ValidationError, "diagram symmetry moves the highest root");

  return rs;
}

const Root& RootSystem::root(int index) const {
  if (index < 1 || index > count()) fail(Errc::NotAPositiveRoot, "root index out of range");
  return positive_[index - 1];
}

int RootSystem::index_of(const Root& r) const {
  auto it = index_.find(r.coeffs);
  if (it == index_.end()) fail(Errc::NotAPositiveRoot, "not a positive root");
  return it->second + 1;
}

bool RootSystem::is_positive_root(const Root& r) const {
  return int(r.coeffs.size()) == rank() && index_.count(r.coeffs) > 0;
}

bool RootSystem::is_root(const Root& r) const {
  if (int(r.coeffs.size()) != rank()) return false;
  if (all_nonneg(r)) return index_.count(r.coeffs) > 0;
  if (all_nonpos(r)) return index_.count(negate(r).coeffs) > 0;
  return false;
}

int RootSystem::height(const Root& r) const {
  if (!is_positive_root(r)) fail(Errc::NotAPositiveRoot, "height needs a positive root");
  return ht(r);
}

int RootSystem::inner(const Root& beta, const Root& gamma) const {
  int s = 0;
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < rank(); ++j) s += beta.coeffs[i] * gamma.coeffs[j] * cartan_[i][j] * d_[j];
  return s;
}

int RootSystem::pairing(const Root& beta, const Root& alpha) const {
  if (!is_root(beta) || !is_root(alpha)) fail(Errc::NotARoot, "pairing needs roots");
  int num = 2 * inner(beta, alpha);
  int den = inner(alpha, alpha);
  if (num % den != 0) fail(Errc::ValidationError, "non-integral Cartan pairing");
  return num / den;
}

std::optional<Root> RootSystem::root_sum(const Root& alpha, const Root& beta) const {
  if (!is_root(alpha) || !is_root(beta)) fail(Errc::NotARoot, "root_sum needs roots");
  Root s = alpha;
  for (int i = 0; i < rank(); ++i) s.coeffs[i] += beta.coeffs[i];
  if (is_root(s)) return s;
  return std::nullopt;
}

Root RootSystem::apply_symmetry(const DiagramSymmetry& s, const Root& r) const {
  Root img;
  img.coeffs.assign(rank(), 0);
  for (int i = 0; i < rank(); ++i) img.coeffs[s.perm[i]] = r.coeffs[i];
  return img;
}

const DiagramSymmetry& RootSystem::symmetry_from_perm(const std::vector<int>& perm) const {
  for (const auto& s : symmetries_)
    if (s.perm == perm) return s;
  fail(Errc::ValidationError, "permutation is not a diagram symmetry");
}

ExtremalBranch RootSystem::extremal_branch(bool b2_takes_c_branch) const {
  if (type_.family == 'A') return ExtremalBranch::TypeA;
  if (type_.family == 'C' && type_.rank >= 3) return ExtremalBranch::TypeC;
  if ((type_.family == 'C' || type_.family == 'B') && type_.rank == 2)
    return b2_takes_c_branch ? ExtremalBranch::TypeC : ExtremalBranch::Other;
  return ExtremalBranch::Other;
}

std::vector<int> RootSystem::extremal_simple_indices() const {
  const int l = rank();
  if (type_.family == 'A') {
    if (l == 1) return {};
    return l == 2 ? std::vector<int>{1, 2} : std::vector<int>{1, l};
  }
  const Root& top = root(count());
  for (int i = 1; i <= l; ++i) {
    Root r = top;
    r.coeffs[i - 1] -= 1;
    if (is_positive_root(r)) return {i};
  }
  return {};
}

std::string RootSystem::format_root(const Root& r) const {
  std::string s;
  for (int i = 0; i < rank(); ++i) {
    int c = r.coeffs[i];
    if (c == 0) continue;
    if (c > 0 && !s.empty()) s += '+';
    if (c == -1) s += '-';
    else if (c != 1) s += std::to_string(c);
    s += 'a' + std::to_string(i + 1);
  }
  return s.empty() ? "0" : s;
}

}  // namespace twist
