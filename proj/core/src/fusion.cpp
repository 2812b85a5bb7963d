#include "halfcomm/fusion.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <tuple>

#include <gmpxx.h>

#include "halfcomm/crossed.hpp"
#include "halfcomm/errors.hpp"
#include "halfcomm/haar.hpp"

namespace halfcomm {

namespace {

std::string join_ints(const std::vector<int>& v) {
  std::string out = "[";
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(v[k]);
  }
  return out + "]";
}

// Parses "[a,b,...]" starting at text[pos]; returns the integers and advances pos.
std::vector<int> parse_int_list(const std::string& text, std::size_t& pos) {
  if (pos >= text.size() || text[pos] != '[') throw ParseError("expected '['", pos);
  ++pos;
  std::vector<int> out;
  if (pos < text.size() && text[pos] == ']') {
    ++pos;
    return out;
  }
  while (true) {
    int value = 0;
    const char* begin = text.data() + pos;
    const auto [ptr, ec] = std::from_chars(begin, text.data() + text.size(), value);
    if (ec != std::errc{}) throw ParseError("expected an integer", pos);
    pos += static_cast<std::size_t>(ptr - begin);
    out.push_back(value);
    if (pos >= text.size()) throw ParseError("expected ',' or ']'", pos);
    if (text[pos] == ']') {
      ++pos;
      return out;
    }
    if (text[pos] != ',') throw ParseError("expected ',' or ']'", pos);
    ++pos;
  }
}

void expect_end(const std::string& text, std::size_t pos) {
  if (pos != text.size()) throw ParseError("unexpected trailing input", pos);
}

// Horizontal-strip placement of letters 1..ℓ(μ) on top of λ, rows limited to max_rows,
// subject to the lattice-word condition on the reverse reading word.
class LRSearch {
public:
  LRSearch(const std::vector<int>& lambda, const std::vector<int>& mu, int max_rows)
      : mu_(mu), rows_(static_cast<std::size_t>(max_rows)) {
    shape_.assign(rows_, 0);
    for (std::size_t r = 0; r < lambda.size() && r < rows_; ++r) shape_[r] = lambda[r];
    counts_.assign(mu_.size(), std::vector<int>(rows_, 0));
  }

  Multiset<std::vector<int>> run() {
    place_letter(0);
    return out_;
  }

private:
  void place_letter(std::size_t k) {
    if (k == mu_.size()) {
      ++out_[shape_];
      return;
    }
    const std::vector<int> before = shape_;
    place_row(k, 0, mu_[k], 0, before);
  }

  // cum = number of letter k placed in rows < r.
  void place_row(std::size_t k, std::size_t r, int remaining, int cum, const std::vector<int>& before) {
    if (remaining == 0) {
      place_letter(k + 1);
      return;
    }
    if (r == rows_) return;
    int cap = remaining;
    if (r > 0) cap = std::min(cap, before[r - 1] - before[r]);
    if (k > 0) {
      // Σ_{r' <= r} a[r'][k] <= Σ_{r' < r} a[r'][k-1]
      int prev = 0;
      for (std::size_t q = 0; q < r; ++q) prev += counts_[k - 1][q];
      cap = std::min(cap, prev - cum);
    }
    for (int a = std::max(cap, 0); a >= 0; --a) {
      shape_[r] = before[r] + a;
      counts_[k][r] = a;
      place_row(k, r + 1, remaining - a, cum + a, before);
    }
    shape_[r] = before[r];
    counts_[k][r] = 0;
  }

  std::vector<int> mu_;
  std::size_t rows_;
  std::vector<int> shape_;
  std::vector<std::vector<int>> counts_;
  Multiset<std::vector<int>> out_;
};

void check_weight(const std::vector<int>& w, int n) {
  if (static_cast<int>(w.size()) != n)
    throw UsageError("U_" + std::to_string(n) + " weight " + join_ints(w) + " has the wrong length");
  if (!std::is_sorted(w.begin(), w.end(), std::greater<>()))
    throw UsageError("U_n weight " + join_ints(w) + " is not weakly decreasing");
}

template <class Label>
void accumulate(Multiset<Label>& out, const Label& label, long mult) {
  if (mult == 0) return;
  out[label] += mult;
}

} // namespace

bool FusionData::in_grade_class(const IrrLabel& a, int m) const {
  const int g = grade(a);
  if (z_graded()) return g == m;
  return ((g - m) % 2 + 2) % 2 == 0;
}

Multiset<std::vector<int>> lr_partitions(const std::vector<int>& lambda, const std::vector<int>& mu, int max_rows) {
  if (max_rows < 0) throw UsageError("max_rows must be nonnegative");
  for (const auto* p : {&lambda, &mu}) {
    if (!std::is_sorted(p->begin(), p->end(), std::greater<>()) || (!p->empty() && p->back() < 0))
      throw UsageError("not a partition: " + join_ints(*p));
  }
  std::vector<int> l = lambda, m = mu;
  while (!l.empty() && l.back() == 0) l.pop_back();
  while (!m.empty() && m.back() == 0) m.pop_back();
  if (static_cast<int>(l.size()) > max_rows) return {};
  Multiset<std::vector<int>> raw = LRSearch(l, m, max_rows).run();
  Multiset<std::vector<int>> out;
  for (const auto& [shape, c] : raw) {
    std::vector<int> nu = shape;
    while (!nu.empty() && nu.back() == 0) nu.pop_back();
    out[nu] += c;
  }
  return out;
}

Decomposition lr_tensor(const std::vector<int>& lambda, const std::vector<int>& mu, int n) {
  if (n < 1) throw UsageError("lr_tensor needs n >= 1");
  check_weight(lambda, n);
  check_weight(mu, n);
  using Key = std::tuple<std::vector<int>, std::vector<int>, int>;
  static std::mutex mutex;
  static std::map<Key, Decomposition> cache;
  const Key key{lambda, mu, n};
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  const int shift_l = lambda.back();
  const int shift_m = mu.back();
  std::vector<int> l = lambda, m = mu;
  for (int& x : l) x -= shift_l;
  for (int& x : m) x -= shift_m;
  Decomposition out;
  for (const auto& [nu, c] : lr_partitions(l, m, n)) {
    std::vector<int> w(static_cast<std::size_t>(n), 0);
    std::copy(nu.begin(), nu.end(), w.begin());
    for (int& x : w) x += shift_l + shift_m;
    out[IrrLabel{w}] += c;
  }
  std::lock_guard lock(mutex);
  return cache.try_emplace(key, std::move(out)).first->second;
}

long un_dim(const std::vector<int>& lambda) {
  if (!std::is_sorted(lambda.begin(), lambda.end(), std::greater<>()))
    throw UsageError("U_n weight " + join_ints(lambda) + " is not weakly decreasing");
  mpz_class num = 1, den = 1;
  const auto n = lambda.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      num *= lambda[i] - lambda[j] + static_cast<long>(j - i);
      den *= static_cast<long>(j - i);
    }
  const mpz_class d = num / den;
  if (!d.fits_slong_p()) throw ResourceError("dimension of " + join_ints(lambda) + " overflows");
  return d.get_si();
}

// ---------- U_n ----------

UnitaryFusion::UnitaryFusion(int n) : n_(n) {
  if (n < 1) throw UsageError("U_n fusion needs n >= 1");
}

void UnitaryFusion::validate(const IrrLabel& a) const { check_weight(a.v, n_); }

long UnitaryFusion::dim(const IrrLabel& a) const {
  validate(a);
  return un_dim(a.v);
}

Decomposition UnitaryFusion::tensor(const IrrLabel& a, const IrrLabel& b) const { return lr_tensor(a.v, b.v, n_); }

IrrLabel UnitaryFusion::dual(const IrrLabel& a) const {
  validate(a);
  IrrLabel out{std::vector<int>(a.v.rbegin(), a.v.rend())};
  for (int& x : out.v) x = -x;
  return out;
}

int UnitaryFusion::grade(const IrrLabel& a) const {
  validate(a);
  return std::accumulate(a.v.begin(), a.v.end(), 0);
}

Decomposition UnitaryFusion::fundamental() const {
  std::vector<int> w(static_cast<std::size_t>(n_), 0);
  w[0] = 1;
  return {{IrrLabel{w}, 1}};
}

std::vector<IrrLabel> UnitaryFusion::labels_up_to(int cap) const {
  std::vector<IrrLabel> out;
  std::vector<int> w(static_cast<std::size_t>(n_));
  // Entries are chosen left to right, each bounded by its predecessor.
  std::function<void(std::size_t, int, int)> rec = [&](std::size_t k, int upper, int used) {
    if (k == w.size()) {
      out.push_back(IrrLabel{w});
      return;
    }
    const int budget = cap - used;
    for (int x = std::min(upper, budget); x >= -budget; --x) {
      w[k] = x;
      rec(k + 1, x, used + std::abs(x));
    }
  };
  if (cap >= 0) rec(0, cap, 0);
  return out;
}

std::string UnitaryFusion::format(const IrrLabel& a) const { return join_ints(a.v); }

IrrLabel UnitaryFusion::parse(const std::string& text) const {
  std::size_t pos = 0;
  IrrLabel out{parse_int_list(text, pos)};
  expect_end(text, pos);
  validate(out);
  return out;
}

// ---------- SU_2 ----------

void SU2Fusion::validate(const IrrLabel& a) const {
  if (a.v.size() != 1 || a.v[0] < 0) throw UsageError("SU_2 label must be a single nonnegative 2j");
}

long SU2Fusion::dim(const IrrLabel& a) const {
  validate(a);
  return a.v[0] + 1;
}

Decomposition SU2Fusion::tensor(const IrrLabel& a, const IrrLabel& b) const {
  validate(a);
  validate(b);
  Decomposition out;
  for (int c = std::abs(a.v[0] - b.v[0]); c <= a.v[0] + b.v[0]; c += 2) out[IrrLabel{{c}}] = 1;
  return out;
}

int SU2Fusion::grade(const IrrLabel& a) const {
  validate(a);
  return a.v[0] % 2;
}

std::vector<IrrLabel> SU2Fusion::labels_up_to(int cap) const {
  std::vector<IrrLabel> out;
  for (int k = 0; k <= cap; ++k) out.push_back(IrrLabel{{k}});
  return out;
}

std::string SU2Fusion::format(const IrrLabel& a) const {
  validate(a);
  const int two_j = a.v[0];
  return two_j % 2 == 0 ? "j=" + std::to_string(two_j / 2) : "j=" + std::to_string(two_j) + "/2";
}

IrrLabel SU2Fusion::parse(const std::string& text) const {
  if (text.rfind("j=", 0) != 0) throw ParseError("expected 'j='", 0);
  std::size_t pos = 2;
  int num = 0;
  const char* begin = text.data() + pos;
  auto [ptr, ec] = std::from_chars(begin, text.data() + text.size(), num);
  if (ec != std::errc{} || num < 0) throw ParseError("expected a nonnegative spin", pos);
  pos += static_cast<std::size_t>(ptr - begin);
  int two_j = 2 * num;
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    int den = 0;
    begin = text.data() + pos;
    auto [ptr2, ec2] = std::from_chars(begin, text.data() + text.size(), den);
    if (ec2 != std::errc{} || den != 2) throw ParseError("spin denominator must be 2", pos);
    pos += static_cast<std::size_t>(ptr2 - begin);
    two_j = num;
  }
  expect_end(text, pos);
  return IrrLabel{{two_j}};
}

// ---------- T^n ----------

TorusFusion::TorusFusion(int n) : n_(n) {
  if (n < 1) throw UsageError("torus fusion needs n >= 1");
}

void TorusFusion::validate(const IrrLabel& a) const {
  if (static_cast<int>(a.v.size()) != n_)
    throw UsageError("torus character " + join_ints(a.v) + " has the wrong length for " + name());
}

Decomposition TorusFusion::tensor(const IrrLabel& a, const IrrLabel& b) const {
  validate(a);
  validate(b);
  IrrLabel c = a;
  for (std::size_t k = 0; k < c.v.size(); ++k) c.v[k] += b.v[k];
  return {{c, 1}};
}

IrrLabel TorusFusion::dual(const IrrLabel& a) const {
  validate(a);
  IrrLabel out = a;
  for (int& x : out.v) x = -x;
  return out;
}

int TorusFusion::grade(const IrrLabel& a) const {
  validate(a);
  return std::accumulate(a.v.begin(), a.v.end(), 0);
}

Decomposition TorusFusion::fundamental() const {
  Decomposition out;
  for (int k = 0; k < n_; ++k) {
    std::vector<int> e(static_cast<std::size_t>(n_), 0);
    e[static_cast<std::size_t>(k)] = 1;
    out[IrrLabel{e}] += 1;
  }
  return out;
}

std::vector<IrrLabel> TorusFusion::labels_up_to(int cap) const {
  std::vector<IrrLabel> out;
  std::vector<int> a(static_cast<std::size_t>(n_));
  std::function<void(std::size_t, int)> rec = [&](std::size_t k, int used) {
    if (k == a.size()) {
      out.push_back(IrrLabel{a});
      return;
    }
    const int budget = cap - used;
    for (int x = -budget; x <= budget; ++x) {
      a[k] = x;
      rec(k + 1, used + std::abs(x));
    }
  };
  if (cap >= 0) rec(0, 0);
  return out;
}

std::string TorusFusion::format(const IrrLabel& a) const { return "t" + join_ints(a.v); }

IrrLabel TorusFusion::parse(const std::string& text) const {
  if (text.empty() || text[0] != 't') throw ParseError("expected 't['", 0);
  std::size_t pos = 1;
  IrrLabel out{parse_int_list(text, pos)};
  expect_end(text, pos);
  validate(out);
  return out;
}

std::unique_ptr<FusionData> make_fusion_data(const std::string& group) {
  if (group == "su2" || group == "sun:2") return std::make_unique<SU2Fusion>();
  const auto colon = group.find(':');
  const std::string head = group.substr(0, colon);
  int n = 0;
  if (colon != std::string::npos) {
    const std::string tail = group.substr(colon + 1);
    const auto [ptr, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), n);
    if (ec != std::errc{} || ptr != tail.data() + tail.size() || n < 1)
      throw UsageError("invalid group dimension in '" + group + "'");
  }
  if (head == "un" && n > 0) return std::make_unique<UnitaryFusion>(n);
  if (head == "torus" && n > 0) return std::make_unique<TorusFusion>(n);
  throw UsageError("no fusion data shipped for '" + group + "' (supported: un:N, sun:2, torus:N)");
}

StructureMaps structure_maps(const IrrLabel& a, const FusionData& data) {
  data.validate(a);
  return {data.dual(a), data.sigma(a), data.grade(a)};
}

// ---------- crossed product and A_*(G) ----------

namespace {

// V s^i ⊗ W s^j = (V ⊗ σ^i(W)) s^{i+j}
Decomposition twisted_product(const IrrLabel& v, int i, const IrrLabel& w, const FusionData& data) {
  return data.tensor(v, i ? data.sigma(w) : w);
}

} // namespace

Multiset<CrossedLabel> crossed_tensor(const CrossedLabel& x, const CrossedLabel& y, const FusionData& data) {
  if ((x.s != 0 && x.s != 1) || (y.s != 0 && y.s != 1)) throw UsageError("s-flag must be 0 or 1");
  data.validate(x.base);
  data.validate(y.base);
  Multiset<CrossedLabel> out;
  for (const auto& [c, m] : twisted_product(x.base, x.s, y.base, data))
    accumulate(out, CrossedLabel{c, x.s ^ y.s}, m);
  return out;
}

void validate_astar(const AStarLabel& x, const FusionData& data) {
  if (x.parity != 0 && x.parity != 1) throw UsageError("parity must be 0 or 1");
  data.validate(x.base);
  if (((data.grade(x.base) - x.parity) % 2 + 2) % 2 != 0)
    throw UsageError("label " + data.format(x.base) + " has grade " + std::to_string(data.grade(x.base)) +
                     ", inconsistent with parity " + std::to_string(x.parity));
}

bool is_simple_astar(const AStarLabel& x, const FusionData& data) {
  if (x.parity != 0 && x.parity != 1) return false;
  data.validate(x.base);
  return data.in_grade_class(x.base, x.parity);
}

Multiset<AStarLabel> astar_tensor(const AStarLabel& x, const AStarLabel& y, const FusionData& data) {
  validate_astar(x, data);
  validate_astar(y, data);
  Multiset<AStarLabel> out;
  const int parity = x.parity ^ y.parity;
  for (const auto& [c, m] : twisted_product(x.base, x.parity, y.base, data)) {
    const AStarLabel label{c, parity};
    if (((data.grade(c) - parity) % 2 + 2) % 2 != 0)
      throw std::logic_error("astar_tensor produced " + format_astar(label, data) + " with inconsistent parity");
    accumulate(out, label, m);
  }
  return out;
}

Multiset<AStarLabel> astar_tensor(const Multiset<AStarLabel>& x, const Multiset<AStarLabel>& y,
                                  const FusionData& data) {
  Multiset<AStarLabel> out;
  for (const auto& [a, ma] : x)
    for (const auto& [b, mb] : y)
      for (const auto& [c, mc] : astar_tensor(a, b, data)) accumulate(out, c, ma * mb * mc);
  return out;
}

AStarLabel astar_dual(const AStarLabel& x, const FusionData& data) {
  validate_astar(x, data);
  if (x.parity == 0) return {data.dual(x.base), 0};
  return {data.sigma(data.dual(x.base)), 1};
}

long astar_dim(const AStarLabel& x, const FusionData& data) {
  validate_astar(x, data);
  return data.dim(x.base);
}

std::string format_astar(const AStarLabel& x, const FusionData& data) {
  return "(" + data.format(x.base) + "," + (x.parity ? "s" : "e") + ")";
}

AStarLabel parse_astar(const std::string& text, const FusionData& data) {
  if (text.size() < 5 || text.front() != '(') throw ParseError("expected '('", 0);
  if (text.back() != ')') throw ParseError("expected ')'", text.size());
  const std::size_t comma = text.rfind(',');
  if (comma == std::string::npos || comma + 3 != text.size())
    throw ParseError("expected ',s)' or ',e)'", comma == std::string::npos ? text.size() - 1 : comma);
  const char flag = text[comma + 1];
  if (flag != 's' && flag != 'e') throw ParseError("parity flag must be 's' or 'e'", comma + 1);
  AStarLabel out;
  try {
    out.base = data.parse(text.substr(1, comma - 1));
  } catch (const ParseError& e) {
    throw ParseError(std::string("bad base label: ") + e.what(), 1 + e.position());
  }
  out.parity = flag == 's' ? 1 : 0;
  validate_astar(out, data);
  return out;
}

MomentCheck moment_crosscheck(int n, int k, int p_max) {
  if (n < 1 || k < 1) throw UsageError("moment_crosscheck needs n >= 1 and k >= 1");
  if (k > p_max)
    throw ResourceError("moment of order " + std::to_string(2 * k) + " exceeds 2 * p_max = " +
                        std::to_string(2 * p_max));
  MomentCheck out;

  const UnitaryFusion data(n);
  std::vector<int> fund(static_cast<std::size_t>(n), 0);
  fund[0] = 1;
  const Multiset<AStarLabel> us{{AStarLabel{IrrLabel{fund}, 1}, 1}};
  Multiset<AStarLabel> power = us;
  for (int t = 1; t < 2 * k; ++t) power = astar_tensor(power, us, data);
  const auto it = power.find(AStarLabel{data.unit(), 0});
  out.fusion_count = it == power.end() ? 0 : it->second;

  CrossedElement character(n);
  for (int i = 1; i <= n; ++i) character += CrossedElement::generator(n, i, i);
  out.haar_value = haar_state(crossed_pow(character, static_cast<unsigned>(2 * k)), p_max);
  return out;
}

} // namespace halfcomm
