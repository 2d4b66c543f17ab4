#include <algorithm>
#include <cmath>
#include <numbers>
#include <queue>
#include <unordered_set>

#include "resonance/construct.hpp"
#include "resonance/error.hpp"

namespace resonance {

double NearHalfScales::lower_edge() const noexcept { return std::numbers::e * band_base(); }

double NearHalfScales::upper_edge() const noexcept { return std::exp(band_exponent) * band_base(); }

int NearHalfScales::block_count() const noexcept { return static_cast<int>(std::floor(band_exponent)); }

NearHalfScales near_half_scales(std::uint64_t N, double sigma, double alpha) {
  require(N >= 16, ErrorKind::Parameter, "near-half scales need N >= 16");
  require(sigma >= 0.5 && sigma <= 0.75, ErrorKind::Domain,
          "near-half construction needs 1/2 <= sigma <= 3/4, got " + std::to_string(sigma));
  require(alpha > 0.0 && alpha < 1.0, ErrorKind::Parameter, "alpha must lie in (0, 1)");
  NearHalfScales s;
  s.sigma = sigma;
  s.log_n = std::log(static_cast<double>(N));
  s.log2_n = std::log(s.log_n);
  s.log3_n = std::log(s.log2_n);
  s.critical_line = sigma == 0.5;
  if (s.critical_line) {
    s.gap_log = s.log3_n;
    s.band_exponent = std::pow(s.log2_n, alpha);
  } else {
    s.gap_log = -std::log(2.0 * sigma - 1.0);
    s.band_exponent = std::pow(2.0 * sigma - 1.0, -alpha);
  }
  return s;
}

std::vector<std::uint64_t> near_half_band(const PrimeTable& table, std::uint64_t N, double sigma, double alpha) {
  const NearHalfScales s = near_half_scales(N, sigma, alpha);
  if (s.upper_edge() <= s.lower_edge()) return {};
  return primes_in_band(table, s.lower_edge(), s.upper_edge());
}

double near_half_weight_formula(double p, std::uint64_t N, double sigma) {
  const NearHalfScales s = near_half_scales(N, sigma, 0.5);
  const double shift = std::log(p) - s.log2_n - s.log3_n;
  require(shift > 0.0, ErrorKind::Domain, "weight formula needs log p > log2 N + log3 N");
  return std::pow(s.band_base(), 1.0 - sigma) / (std::sqrt(s.gap_log) * std::pow(p, 1.0 - sigma) * shift);
}

double near_half_weight(std::uint64_t p, std::uint64_t N, double sigma) {
  const NearHalfScales s = near_half_scales(N, sigma, 0.5);
  require(static_cast<double>(p) > s.lower_edge(), ErrorKind::Domain,
          "prime " + std::to_string(p) + " is not above the band's lower edge " + std::to_string(s.lower_edge()));
  return near_half_weight_formula(static_cast<double>(p), N, sigma);
}

std::vector<PrimeBlock> prime_blocks(const PrimeTable& table, std::uint64_t N, double sigma, double alpha) {
  const NearHalfScales s = near_half_scales(N, sigma, alpha);
  const int count = s.block_count();
  std::vector<PrimeBlock> blocks(static_cast<std::size_t>(std::max(count, 0)));
  for (int k = 1; k <= count; ++k) blocks[static_cast<std::size_t>(k - 1)].k = k;
  const double base = s.band_base();
  for (const std::uint64_t p : near_half_band(table, N, sigma, alpha)) {
    int k = static_cast<int>(std::ceil(std::log(static_cast<double>(p) / base))) - 1;
    // Guard against rounding exactly at e^k L.
    while (k > 1 && static_cast<double>(p) <= std::exp(static_cast<double>(k)) * base) --k;
    while (k < count && static_cast<double>(p) > std::exp(static_cast<double>(k + 1)) * base) ++k;
    k = std::clamp(k, 1, count);
    blocks[static_cast<std::size_t>(k - 1)].primes.push_back(p);
  }
  return blocks;
}

double block_threshold(std::uint64_t N, double sigma, int k, double a) {
  require(k >= 1, ErrorKind::Parameter, "block index k must be >= 1");
  const NearHalfScales s = near_half_scales(N, sigma, 0.5);
  const double kd = k;
  return a * s.log_n / (kd * kd * s.gap_log);
}

int max_factors_below(double tau) noexcept {
  return std::max(0, static_cast<int>(std::ceil(tau)) - 1);
}

SupportSpec near_half_support_spec(const PrimeTable& table, const ConstructionParams& params) {
  SupportSpec spec;
  const auto blocks = prime_blocks(table, params.N, params.sigma, params.alpha);
  std::vector<std::pair<std::uint64_t, int>> tagged;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    spec.max_per_block.push_back(max_factors_below(block_threshold(params.N, params.sigma, blocks[b].k, params.a)));
    for (const auto p : blocks[b].primes) tagged.emplace_back(p, static_cast<int>(b));
  }
  std::sort(tagged.begin(), tagged.end());
  for (const auto& [p, b] : tagged) {
    spec.primes.push_back(p);
    spec.weights.push_back(near_half_weight(p, params.N, params.sigma));
    spec.block_of.push_back(b);
  }
  return spec;
}

namespace {

struct Node {
  std::vector<int> picks;  // positions in weight order, increasing
  double weight = 1.0;
};

struct NodeLess {
  bool operator()(const Node& l, const Node& r) const {
    if (l.weight != r.weight) return l.weight < r.weight;
    return l.picks > r.picks;
  }
};

struct PicksHash {
  std::size_t operator()(const std::vector<std::uint64_t>& v) const noexcept {
    std::size_t h = v.size();
    for (const auto x : v) h ^= std::hash<std::uint64_t>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

}  // namespace

ResonatorSet enumerate_support(const SupportSpec& spec, std::size_t budget, const ConstructionParams& params) {
  require(budget >= 1, ErrorKind::Parameter, "enumeration budget must be >= 1");
  const std::size_t n = spec.primes.size();
  require(spec.weights.size() == n && spec.block_of.size() == n, ErrorKind::Parameter,
          "support spec arrays must align");
  for (std::size_t i = 0; i < n; ++i) {
    require(spec.weights[i] > 0.0, ErrorKind::Parameter, "support weights must be positive");
    require(spec.block_of[i] >= 0 && static_cast<std::size_t>(spec.block_of[i]) < spec.max_per_block.size(),
            ErrorKind::Parameter, "block index out of range");
    require(i == 0 || spec.primes[i - 1] < spec.primes[i], ErrorKind::Parameter, "support primes must increase");
  }

  std::vector<int> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<int>(i);
  std::stable_sort(order.begin(), order.end(), [&](int l, int r) { return spec.weights[l] > spec.weights[r]; });

  auto admissible = [&](const std::vector<int>& picks) {
    std::vector<int> counts(spec.max_per_block.size(), 0);
    for (const int pos : picks) {
      const int b = spec.block_of[static_cast<std::size_t>(order[static_cast<std::size_t>(pos)])];
      if (++counts[static_cast<std::size_t>(b)] > spec.max_per_block[static_cast<std::size_t>(b)]) return false;
    }
    return true;
  };

  std::priority_queue<Node, std::vector<Node>, NodeLess> heap;
  heap.push(Node{});
  std::vector<std::vector<int>> accepted;
  while (!heap.empty() && accepted.size() < budget) {
    Node node = heap.top();
    heap.pop();
    const bool ok = admissible(node.picks);
    if (ok) accepted.push_back(node.picks);
    const int last = node.picks.empty() ? -1 : node.picks.back();
    const int next = last + 1;
    if (static_cast<std::size_t>(next) >= n) continue;
    const double w_next = spec.weights[static_cast<std::size_t>(order[static_cast<std::size_t>(next)])];
    if (ok) {
      Node extend = node;
      extend.picks.push_back(next);
      extend.weight *= w_next;
      heap.push(std::move(extend));
    }
    if (last >= 0) {
      const double w_last = spec.weights[static_cast<std::size_t>(order[static_cast<std::size_t>(last)])];
      Node shift = std::move(node);
      shift.picks.back() = next;
      shift.weight = shift.weight / w_last * w_next;
      heap.push(std::move(shift));
    }
  }

  // Translate to sorted prime lists; drop anything whose maximal divisors
  // were not kept (only possible when some weight exceeds 1).
  std::vector<std::vector<std::uint64_t>> members;
  members.reserve(accepted.size());
  for (const auto& picks : accepted) {
    std::vector<std::uint64_t> ps;
    for (const int pos : picks) ps.push_back(spec.primes[static_cast<std::size_t>(order[static_cast<std::size_t>(pos)])]);
    std::sort(ps.begin(), ps.end());
    members.push_back(std::move(ps));
  }
  std::stable_sort(members.begin(), members.end(), [](const auto& l, const auto& r) { return l.size() < r.size(); });
  std::unordered_set<std::vector<std::uint64_t>, PicksHash> kept;
  std::vector<WeightedElement> elements;
  for (const auto& ps : members) {
    bool closed = true;
    for (std::size_t i = 0; i < ps.size() && closed; ++i) {
      std::vector<std::uint64_t> sub = ps;
      sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(i));
      closed = kept.contains(sub);
    }
    if (!closed) continue;
    double weight = 1.0;
    for (const auto p : ps) {
      const auto it = std::lower_bound(spec.primes.begin(), spec.primes.end(), p);
      weight *= spec.weights[static_cast<std::size_t>(it - spec.primes.begin())];
    }
    elements.push_back({FactoredInt::square_free(ps), weight});
    kept.insert(ps);
  }
  return ResonatorSet(SetKind::NearHalf, params, std::move(elements));
}

ResonatorSet enumerate_support(const PrimeTable& table, const ConstructionParams& params, std::size_t budget) {
  require(budget >= 1, ErrorKind::Parameter, "enumeration budget must be >= 1");
  std::vector<std::string> notes = validate_near_half(params);
  const SupportSpec spec = near_half_support_spec(table, params);
  const std::size_t capped = static_cast<std::size_t>(std::min<std::uint64_t>(budget, params.N));
  ResonatorSet raw = enumerate_support(spec, capped, params);
  std::vector<WeightedElement> elements(raw.elements().begin(), raw.elements().end());
  if (params.sigma == 0.5) notes.push_back("critical-line weights use 2 sigma - 1 -> 1/log log N");
  return ResonatorSet(SetKind::NearHalf, params, std::move(elements), std::move(notes));
}

}  // namespace resonance
