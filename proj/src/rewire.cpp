#include "hampower/rewire.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "hampower/calculus.hpp"
#include "hampower/errors.hpp"

namespace hampower {

std::vector<int> LabeledPowerPath::class_positions(int t) const {
  std::vector<int> out;
  for (int p = 0; p < static_cast<int>(labels.size()); ++p) {
    if (labels[p] == t) out.push_back(p);
  }
  return out;
}

LabeledPowerPath plain_path(int L, int m) {
  LabeledPowerPath p;
  p.m = m;
  p.order.resize(static_cast<std::size_t>(L));
  for (int i = 0; i < L; ++i) p.order[i] = i;
  return p;
}

void validate(const LabeledPowerPath& path) {
  if (path.m < 1) throw DomainError("path power m must be at least 1");
  if (path.k < 1) throw DomainError("class count k+1 needs k >= 1");
  std::unordered_set<int> seen;
  for (int v : path.order) {
    if (!seen.insert(v).second) throw DomainError("vertex " + std::to_string(v) + " repeated in order");
  }
  if (!path.labels.empty()) {
    if (path.labels.size() != path.order.size()) throw DomainError("labels and order differ in length");
    for (int c : path.labels) {
      if (c < 0 || c > path.k) throw DomainError("label " + std::to_string(c) + " outside 0..k");
    }
  }
}

std::vector<int> RunPartition::run_sizes() const {
  std::vector<int> out;
  for (const auto& seg : s) out.push_back(static_cast<int>(seg.size()));
  return out;
}

std::vector<int> RunPartition::gap_sizes() const {
  std::vector<int> out;
  for (const auto& seg : t) out.push_back(static_cast<int>(seg.size()));
  return out;
}

std::vector<int> RunPartition::flatten() const {
  std::vector<int> out;
  if (t.empty()) return out;
  out.insert(out.end(), t[0].begin(), t[0].end());
  for (std::size_t i = 0; i < s.size(); ++i) {
    out.insert(out.end(), s[i].begin(), s[i].end());
    out.insert(out.end(), t[i + 1].begin(), t[i + 1].end());
  }
  return out;
}

namespace {

std::vector<char> position_mask(int L, std::span<const int> positions) {
  std::vector<char> mask(static_cast<std::size_t>(L), 0);
  for (int p : positions) {
    if (p < 0 || p >= L) throw DomainError("position " + std::to_string(p) + " outside the path");
    if (mask[p]) throw DomainError("position " + std::to_string(p) + " listed twice");
    mask[p] = 1;
  }
  return mask;
}

}  // namespace

RunPartition v0_runs(const LabeledPowerPath& path, std::span<const int> v0_positions) {
  if (v0_positions.empty()) throw DomainError("V_0 must be nonempty");
  auto mask = position_mask(path.length(), v0_positions);
  RunPartition rp;
  rp.t.emplace_back();
  for (int p = 0; p < path.length(); ++p) {
    int v = path.order[p];
    if (mask[p]) {
      if (p == 0 || !mask[p - 1]) rp.s.emplace_back();
      rp.s.back().push_back(v);
    } else {
      if (p > 0 && mask[p - 1]) rp.t.emplace_back();
      rp.t.back().push_back(v);
    }
  }
  if (mask[path.length() - 1]) rp.t.emplace_back();  // empty T_q
  return rp;
}

std::int64_t induced_edges(int m, std::span<const int> positions) {
  std::vector<int> sorted(positions.begin(), positions.end());
  std::sort(sorted.begin(), sorted.end());
  std::int64_t count = 0;
  std::size_t lo = 0;
  for (std::size_t hi = 0; hi < sorted.size(); ++hi) {
    while (sorted[hi] - sorted[lo] > m) ++lo;
    count += static_cast<std::int64_t>(hi - lo);
  }
  return count;
}

std::int64_t induced_edges(const LabeledPowerPath& path, std::span<const int> positions) {
  position_mask(path.length(), positions);
  return induced_edges(path.m, positions);
}

std::vector<int> shift(ShiftDirection dir, Segment a, Segment b, int h, std::span<const int> order) {
  const int L = static_cast<int>(order.size());
  if (h < 1) throw DomainError("shift amount must be positive");
  if (a.begin < 0 || a.begin > a.end || b.begin > b.end || b.end > L) {
    throw DomainError("shift segment outside the order");
  }
  if (a.end > b.begin) throw DomainError("shift segments overlap or are out of order");
  std::vector<int> out;
  out.reserve(order.size());
  auto put = [&](int from, int to) { out.insert(out.end(), order.begin() + from, order.begin() + to); };
  if (dir == ShiftDirection::right) {
    int moved = std::min(h, a.size());
    put(0, a.end - moved);
    put(a.end, b.begin);
    put(a.end - moved, a.end);
    put(b.begin, L);
  } else {
    int moved = std::min(h, b.size());
    put(0, a.end);
    put(b.begin, b.begin + moved);
    put(a.end, b.begin);
    put(b.begin + moved, L);
  }
  return out;
}

bool RewireCertificate::valid() const {
  return edge_count_after <= edge_count_before && permutation && partition_valid &&
         std::all_of(conditions.begin(), conditions.end(), [](bool b) { return b; });
}

namespace {

using Seg = std::deque<int>;

// Segment lists with 1-based S (S[0] unused) and 0-based T, as in the pseudocode.
struct Runs {
  std::vector<Seg> S;
  std::vector<Seg> T;
  int q = 0;

  static void shift_right(Seg& a, Seg& b, int h) {
    int moved = std::min<int>(h, static_cast<int>(a.size()));
    for (int c = 0; c < moved; ++c) {
      b.push_front(a.back());
      a.pop_back();
    }
  }
  static void shift_left(Seg& a, Seg& b, int h) {
    int moved = std::min<int>(h, static_cast<int>(b.size()));
    for (int c = 0; c < moved; ++c) {
      a.push_back(b.front());
      b.pop_front();
    }
  }
  int xs(int i) const { return static_cast<int>(S[i].size()); }
  int ys(int i) const { return static_cast<int>(T[i].size()); }
};

}  // namespace

RewireResult rewire(const LabeledPowerPath& path, std::span<const int> v0_positions) {
  validate(path);
  const int m = path.m;
  const std::int64_t L = path.length();
  RunPartition start = v0_runs(path, v0_positions);

  Runs R;
  R.q = start.q();
  R.S.emplace_back();
  for (const auto& seg : start.s) R.S.emplace_back(seg.begin(), seg.end());
  for (const auto& seg : start.t) R.T.emplace_back(seg.begin(), seg.end());

  const std::int64_t cap = 10 * L * L;
  std::int64_t iterations = 0;
  auto tick = [&] {
    if (++iterations > cap) throw InternalError("REWIRE exceeded its iteration cap of 10*L^2");
  };

  int& q = R.q;
  int i = 1;
  while (i <= q) {
    tick();
    // (1)
    if (R.xs(i) > m) {
      if (i == q) {
        R.S.emplace_back();
        R.T.emplace_back();
        ++q;
      }
      Runs::shift_right(R.S[i], R.S[i + 1], R.xs(i) - m);
    }
    int step = 2;
    for (;;) {
      if (step == 2) {
        if (R.ys(i) > m && i < q) Runs::shift_right(R.T[i], R.T[i + 1], R.ys(i) - m);
        step = 3;
      }
      if (step == 3) {
        if (R.xs(i) + R.ys(i) < m && i < q) {
          Runs::shift_left(R.S[i], R.S[i + 1], m - R.xs(i) - R.ys(i));
          if (R.S[i + 1].empty()) {
            R.T[i].insert(R.T[i].end(), R.T[i + 1].begin(), R.T[i + 1].end());
            R.S.erase(R.S.begin() + i + 1);
            R.T.erase(R.T.begin() + i + 1);
            --q;
            if (R.ys(i) > m && i < q) {
              tick();
              step = 2;
              continue;
            }
            if (i < q) {
              tick();
              step = 3;
              continue;
            }
          }
        }
        step = 4;
      }
      // (4)
      if (i < q - 1 && R.ys(i) + R.xs(i + 1) < m) {
        Runs::shift_left(R.T[i], R.T[i + 1], m - R.ys(i) - R.xs(i + 1));
        if (R.T[i + 1].empty()) {
          R.S[i + 1].insert(R.S[i + 1].end(), R.S[i + 2].begin(), R.S[i + 2].end());
          R.T[i + 1] = std::move(R.T[i + 2]);
          R.S.erase(R.S.begin() + i + 2);
          R.T.erase(R.T.begin() + i + 2);
          --q;
          tick();
          continue;
        }
      }
      break;
    }
    ++i;
  }

  RewireResult out;
  for (int j = 1; j <= q; ++j) out.partition.s.emplace_back(R.S[j].begin(), R.S[j].end());
  for (int j = 0; j <= q; ++j) out.partition.t.emplace_back(R.T[j].begin(), R.T[j].end());
  out.order = out.partition.flatten();

  RewireCertificate& cert = out.certificate;
  cert.iterations = iterations;

  std::unordered_set<int> v0;
  for (int p : v0_positions) v0.insert(path.order[p]);
  cert.edge_count_before = induced_edges(m, v0_positions);
  std::vector<int> after_positions;
  for (int p = 0; p < static_cast<int>(out.order.size()); ++p) {
    if (v0.count(out.order[p])) after_positions.push_back(p);
  }
  cert.edge_count_after = induced_edges(m, after_positions);

  std::vector<int> a = path.order, b = out.order;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  cert.permutation = a == b;

  bool structural = q >= 1;
  for (const auto& seg : out.partition.s) {
    for (int v : seg) structural = structural && v0.count(v);
  }
  for (const auto& seg : out.partition.t) {
    for (int v : seg) structural = structural && !v0.count(v);
  }
  cert.partition_valid = structural;

  std::vector<int> x = out.partition.run_sizes();  // x[j-1] = x_j
  std::vector<int> y = out.partition.gap_sizes();  // y[j] = y_j
  bool c1 = true, c2 = true, c3 = true, c4 = true;
  for (int j = 1; j <= q; ++j) c1 = c1 && x[j - 1] >= 1 && x[j - 1] <= m;
  for (int j = 1; j <= q - 1; ++j) {
    c2 = c2 && y[j] >= 0 && y[j] <= m;
    c3 = c3 && x[j - 1] + y[j] >= m;
  }
  for (int j = 1; j <= q - 2; ++j) c4 = c4 && y[j] + x[j] >= m;
  cert.conditions = {c1, c2, c3, c4};

  Rational ratio = 0;
  for (int j = 1; j <= q - 1; ++j) {
    if (x[j - 1] > 0) ratio = std::max(ratio, Rational(y[j], x[j - 1]));
  }
  cert.max_gap_ratio = ratio;
  return out;
}

BoundCheck weak_bound_check(const LabeledPowerPath& path, std::span<const int> v0_positions, int k) {
  const std::int64_t L = path.length();
  const auto size = static_cast<std::int64_t>(v0_positions.size());
  if ((k + 1) * size < L) throw DomainError("weak bound needs |V_0| >= L/(k+1)");
  BoundCheck out;
  out.lhs = Rational(static_cast<long long>(induced_edges(path, v0_positions)));
  Surd f_lambda = lambda_profile(k, path.m).f_lambda;
  out.rhs = f_lambda * Surd(Rational(static_cast<long long>(size))) -
            Surd(Rational(static_cast<long long>(path.m) * (path.m + 1)));
  out.holds = surd_cmp(Surd(out.lhs), out.rhs) >= 0;
  return out;
}

BoundCheck path_edges_check(const LabeledPowerPath& path, std::span<const int> a_positions) {
  const int L = path.length();
  auto mask = position_mask(L, a_positions);
  std::vector<int> b_positions;
  for (int p = 0; p < L; ++p) {
    if (!mask[p]) b_positions.push_back(p);
  }
  BoundCheck out;
  out.lhs = Rational(static_cast<long long>(induced_edges(path.m, a_positions) +
                                            induced_edges(path.m, b_positions)));
  Rational f_ell = f_value(1, path.m, ell_argmin(1, path.m));
  out.rhs = Surd(f_ell * Rational(L) - Rational(2LL * path.m * path.m));
  out.holds = surd_cmp(Surd(out.lhs), out.rhs) >= 0;
  return out;
}

bool classes_clique_free(const LabeledPowerPath& path, int s) {
  if (s < 2) throw DomainError("clique size s must be at least 2");
  for (int t = 0; t <= path.k; ++t) {
    std::vector<int> pos = path.class_positions(t);
    for (std::size_t a = 0; a + s - 1 < pos.size(); ++a) {
      if (pos[a + s - 1] - pos[a] <= path.m) return false;
    }
  }
  return true;
}

HPathVerdict spanning_h_path_check(const LabeledPowerPath& path, int t, int s, int h) {
  validate(path);
  if (path.labels.empty()) throw DomainError("spanning h-path check needs class labels");
  if (t < 0 || t > path.k) throw DomainError("class index outside 0..k");
  if (h < 1) throw DomainError("h must be at least 1");
  if (path.m < path.k * (s - 1) + h || !classes_clique_free(path, s)) return HPathVerdict::inapplicable;
  std::vector<int> pos = path.class_positions(t);
  for (std::size_t a = 0; a + h < pos.size(); ++a) {
    if (pos[a + h] - pos[a] > path.m) return HPathVerdict::fails;
  }
  return HPathVerdict::holds;
}

std::int64_t q_far_count(const LabeledPowerPath& path, int t, int q) {
  if (q < 1) throw DomainError("q must be at least 1");
  if (path.labels.empty()) throw DomainError("far-edge census needs class labels");
  std::vector<int> pos = path.class_positions(t);
  std::int64_t count = 0;
  for (std::size_t a = 0; a + q < pos.size(); ++a) {
    if (pos[a + q] - pos[a] <= path.m) ++count;
  }
  return count;
}

int segment_far_minimum(int k, int m, int s, int i) {
  if (k < 1 || s < 2 || i < 1) throw DomainError("segment_far_minimum needs k >= 1, s >= 2, i >= 1");
  const int total = m + 1;
  if (total > (k + 1) * (s - 1)) {
    throw DomainError("no composition of m+1 into k+1 parts of size at most s-1");
  }
  int best = total + 1;
  // parts in nonincreasing order; the objective is symmetric
  auto go = [&](auto&& self, int part, int left, int cap, int acc) -> void {
    if (acc >= best) return;
    if (part == k + 1) {
      if (left == 0) best = acc;
      return;
    }
    int slots = k + 1 - part;
    for (int c = std::min(cap, left); c >= 0; --c) {
      if (c * slots < left) break;
      self(self, part + 1, left - c, c, acc + std::max(0, c - i));
    }
  };
  go(go, 0, total, s - 1, 0);
  return best;
}

Rational ob_bound(int z, std::int64_t L, int m, int i) {
  if (i < 1 || i > m) throw DomainError("ob_bound needs 1 <= i <= m");
  return Rational(z) * Rational(static_cast<long long>(L - m)) / Rational(m + 1 - i);
}

FarCheck ob2_check(const LabeledPowerPath& path, int s, int h, int i, int j) {
  validate(path);
  if (path.labels.empty()) throw DomainError("ob2 check needs class labels");
  if (path.m != path.k * (s - 1) + h) throw DomainError("ob2 check needs m = k(s-1)+h");
  if (i <= h || j <= h) throw DomainError("ob2 check needs i > h and j > h");
  int denom = s + h - i - j;
  if (denom <= 0) throw DomainError("ob2 check needs s+h-i-j > 0");
  if (!classes_clique_free(path, s)) throw DomainError("ob2 check needs K_s-free classes");
  std::int64_t xi = 0, xj = 0;
  for (int t = 0; t <= path.k; ++t) {
    xi += q_far_count(path, t, i);
    xj += q_far_count(path, t, j);
  }
  FarCheck out;
  out.lhs = Rational(static_cast<long long>(path.length() - xi));
  out.rhs = Rational((path.k + 1) * i) + Rational(i, denom) * Rational(static_cast<long long>(xj));
  out.holds = out.lhs <= out.rhs;
  return out;
}

}  // namespace hampower
