#include "kschur/kschur.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <map>
#include <mutex>
#include <tuple>

#include "json_int.hpp"
#include "kschur/cache.hpp"
#include "kschur/cores.hpp"
#include "kschur/errors.hpp"
#include "kschur/ktableaux.hpp"

namespace kschur {

using nlohmann::json;

namespace {

void check_k(int k) { require(k >= 1, "bound k must be at least 1"); }

void check_bounded(const Partition& p, int k) {
  check_k(k);
  require(p.largest() <= k,
          to_string(p) + " is not " + std::to_string(k) + "-bounded");
}

std::atomic<int> g_guard_degree{10};

struct Registry {
  std::mutex mu;
  std::map<std::pair<int, int>, std::shared_future<std::shared_ptr<const KostkaMatrix>>>
      matrices;
  std::map<std::tuple<int, Partition, Partition>, SymPoly> klr;
};

Registry& registry() {
  static Registry r;
  return r;
}

}  // namespace

std::size_t KostkaMatrix::position(const Partition& p) const {
  auto it = std::lower_bound(index.begin(), index.end(), p, DescendingLex{});
  require(it != index.end() && *it == p,
          to_string(p) + " is not a " + std::to_string(k) +
              "-bounded partition of " + std::to_string(degree));
  return static_cast<std::size_t>(it - index.begin());
}

const Integer& KostkaMatrix::K(const Partition& mu, const Partition& lambda) const {
  return forward[position(mu)][position(lambda)];
}

const Integer& KostkaMatrix::Kbar(const Partition& mu, const Partition& lambda) const {
  return inverse[position(mu)][position(lambda)];
}

KostkaMatrix compute_kostka_matrix(int k, int n) {
  check_k(k);
  require(n >= 0, "degree must be nonnegative");
  KostkaMatrix m;
  m.k = k;
  m.degree = n;
  m.index = enumerate_bounded(n, k);
  const std::size_t size = m.index.size();
  std::vector<std::vector<int>> weights;
  weights.reserve(size);
  for (const auto& p : m.index) weights.push_back(p.parts());
  m.forward.assign(size, std::vector<Integer>(size));
  for (std::size_t i = 0; i < size; ++i) {
    const auto core = to_core(m.index[i], k);
    auto counts = count_core_fillings(k, core.shape(), Partition{}, weights);
    for (std::size_t j = 0; j < size; ++j) {
      ensure(counts[j] == 0 || dominates(m.index[i], m.index[j]),
             "k-Kostka number K_{" + to_string(m.index[i]) + "," +
                 to_string(m.index[j]) + "} is nonzero without dominance");
      m.forward[i][j] = std::move(counts[j]);
    }
  }
  m.inverse = unitriangular_inverse(m.forward);
  return m;
}

std::string kostka_cache_name(int k, int n) {
  return "kostka-v" + std::to_string(cache::kFormatVersion) + "-k" + std::to_string(k) +
         "-n" + std::to_string(n) + ".json";
}

std::string kostka_to_json(const KostkaMatrix& m) {
  json payload;
  payload["format_version"] = cache::kFormatVersion;
  payload["k"] = m.k;
  payload["degree"] = m.degree;
  json index = json::array();
  for (const auto& p : m.index) index.push_back(p.parts());
  payload["index"] = std::move(index);
  auto flatten = [](const IntMatrix& a) {
    json arr = json::array();
    for (const auto& row : a)
      for (const auto& x : row) arr.push_back(detail::int_to_json(x));
    return arr;
  };
  payload["forward"] = flatten(m.forward);
  payload["inverse"] = flatten(m.inverse);
  payload["checksum"] = cache::checksum(payload.dump());
  return payload.dump();
}

KostkaMatrix kostka_from_json(const std::string& text) {
  json payload;
  try {
    payload = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("Kostka cache is not valid JSON: ") + e.what());
  }
  try {
    if (!payload.is_object() || !payload.contains("checksum"))
      throw ParseError("Kostka cache lacks a checksum");
    const std::string stored = payload.at("checksum").get<std::string>();
    payload.erase("checksum");
    if (cache::checksum(payload.dump()) != stored)
      throw ParseError("Kostka cache checksum mismatch");
    if (payload.at("format_version").get<int>() != cache::kFormatVersion)
      throw ParseError("Kostka cache has an unsupported format version");
    KostkaMatrix m;
    m.k = payload.at("k").get<int>();
    m.degree = payload.at("degree").get<int>();
    for (const auto& p : payload.at("index")) m.index.emplace_back(p.get<std::vector<int>>());
    const std::size_t n = m.index.size();
    auto unflatten = [n](const json& arr) {
      if (!arr.is_array() || arr.size() != n * n)
        throw ParseError("Kostka cache matrix has the wrong size");
      IntMatrix a(n, std::vector<Integer>(n));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = detail::int_from_json(arr[i * n + j]);
      return a;
    };
    m.forward = unflatten(payload.at("forward"));
    m.inverse = unflatten(payload.at("inverse"));
    return m;
  } catch (const json::exception& e) {
    throw ParseError(std::string("Kostka cache is malformed: ") + e.what());
  } catch (const PreconditionError& e) {
    throw ParseError(std::string("Kostka cache is malformed: ") + e.what());
  }
}

namespace {

std::shared_ptr<const KostkaMatrix> load_or_compute(int k, int n) {
  const std::string name = kostka_cache_name(k, n);
  if (auto text = cache::read(name)) {
    try {
      KostkaMatrix m = kostka_from_json(*text);
      if (m.k == k && m.degree == n && m.index == enumerate_bounded(n, k))
        return std::make_shared<const KostkaMatrix>(std::move(m));
    } catch (const ParseError&) {
    }
    cache::reject(name);
  }
  auto m = std::make_shared<const KostkaMatrix>(compute_kostka_matrix(k, n));
  cache::write(name, kostka_to_json(*m));
  return m;
}

}  // namespace

std::shared_ptr<const KostkaMatrix> kostka_matrix(int k, int n) {
  check_k(k);
  require(n >= 0, "degree must be nonnegative");
  auto& reg = registry();
  std::promise<std::shared_ptr<const KostkaMatrix>> promise;
  {
    std::lock_guard lock(reg.mu);
    auto it = reg.matrices.find({k, n});
    if (it != reg.matrices.end()) {
      auto fut = it->second;
      reg.mu.unlock();
      try {
        auto value = fut.get();
        reg.mu.lock();
        return value;
      } catch (...) {
        reg.mu.lock();
        throw;
      }
    }
    reg.matrices.emplace(std::make_pair(k, n), promise.get_future().share());
  }
  try {
    auto m = load_or_compute(k, n);
    promise.set_value(m);
    return m;
  } catch (...) {
    promise.set_exception(std::current_exception());
    std::lock_guard lock(reg.mu);
    reg.matrices.erase({k, n});
    throw;
  }
}

void clear_memory_caches() {
  auto& reg = registry();
  std::lock_guard lock(reg.mu);
  reg.matrices.clear();
  reg.klr.clear();
}

SymPoly kschur_in_h(const Partition& lambda, int k) {
  check_bounded(lambda, k);
  const auto km = kostka_matrix(k, lambda.degree());
  const std::size_t col = km->position(lambda);
  SymPoly out(Basis::h, lambda.degree());
  for (std::size_t i = 0; i <= col; ++i) out.add(km->index[i], km->inverse[i][col]);
  return out;
}

SymPoly h_in_kschur(const Partition& lambda, int k) {
  check_bounded(lambda, k);
  const auto km = kostka_matrix(k, lambda.degree());
  const std::size_t col = km->position(lambda);
  SymPoly out(Basis::kschur, lambda.degree(), k);
  for (std::size_t i = 0; i <= col; ++i) out.add(km->index[i], km->forward[i][col]);
  return out;
}

SymPoly kschur_to_h(const SymPoly& f) {
  require(f.basis() == Basis::kschur, "kschur_to_h needs a k-Schur expansion");
  SymPoly out(Basis::h, f.degree());
  for (const auto& [p, c] : f.terms()) out += kschur_in_h(p, f.k()) * c;
  return out;
}

SymPoly h_to_kschur(const SymPoly& f, int k) {
  require(f.basis() == Basis::h, "h_to_kschur needs an h-expansion");
  SymPoly out(Basis::kschur, f.degree(), k);
  for (const auto& [p, c] : f.terms()) out += h_in_kschur(p, k) * c;
  return out;
}

std::vector<Partition> k_pieri_set(const Partition& nu, int l, int k) {
  check_bounded(nu, k);
  require(1 <= l && l <= k, "k-Pieri needs 1 <= l <= k");
  const Partition nu_conj = k_conjugate(nu, k);
  std::vector<Partition> out;
  const SymPoly strips = classical_pieri(l, nu);
  for (const auto& term : strips.terms()) {
    const Partition& lam = term.first;
    if (lam.largest() > k) continue;
    if (is_vertical_strip(k_conjugate(lam, k), nu_conj)) out.push_back(lam);
  }
  return out;
}

SymPoly h_times_kschur(const Partition& lambda, const Partition& mu, int k) {
  check_bounded(lambda, k);
  check_bounded(mu, k);
  const int total = lambda.degree() + mu.degree();
  const Partition inner = to_core(mu, k).shape();
  SymPoly out(Basis::kschur, total, k);
  for (const auto& nu : enumerate_bounded(total, k)) {
    const Partition outer = to_core(nu, k).shape();
    if (!contains(outer, inner)) continue;
    out.add(nu, count_core_fillings(k, outer, inner, {lambda.parts()})[0]);
  }
  return out;
}

SymPoly klr_skew_route(const Partition& lambda, const Partition& mu, int k) {
  check_bounded(lambda, k);
  check_bounded(mu, k);
  const int total = lambda.degree() + mu.degree();
  const auto km = kostka_matrix(k, lambda.degree());
  const std::size_t col = km->position(lambda);
  std::vector<std::vector<int>> alphas;
  std::vector<Integer> kbar;
  for (std::size_t i = 0; i <= col; ++i)
    if (km->inverse[i][col] != 0) {
      alphas.push_back(km->index[i].parts());
      kbar.push_back(km->inverse[i][col]);
    }
  const Partition inner = to_core(mu, k).shape();
  SymPoly out(Basis::kschur, total, k);
  for (const auto& nu : enumerate_bounded(total, k)) {
    const Partition outer = to_core(nu, k).shape();
    if (!contains(outer, inner)) continue;
    const auto counts = count_core_fillings(k, outer, inner, alphas);
    Integer c = 0;
    for (std::size_t a = 0; a < alphas.size(); ++a) c += kbar[a] * counts[a];
    out.add(nu, c);
  }
  return out;
}

SymPoly klr_h_route(const Partition& lambda, const Partition& mu, int k) {
  check_bounded(lambda, k);
  check_bounded(mu, k);
  return h_to_kschur(multiply_h(kschur_in_h(lambda, k), kschur_in_h(mu, k)), k);
}

int klr_guard_degree() { return g_guard_degree.load(); }
void set_klr_guard_degree(int d) { g_guard_degree.store(d); }

SymPoly klr(const Partition& lambda, const Partition& mu, int k) {
  check_bounded(lambda, k);
  check_bounded(mu, k);
  auto& reg = registry();
  const auto key = std::make_tuple(k, lambda, mu);
  {
    std::lock_guard lock(reg.mu);
    if (auto it = reg.klr.find(key); it != reg.klr.end()) return it->second;
  }
  SymPoly out = klr_skew_route(lambda, mu, k);
  if (lambda.degree() + mu.degree() <= klr_guard_degree())
    ensure(out == klr_h_route(lambda, mu, k),
           "k-Littlewood-Richardson routes disagree for " + to_string(lambda) + " * " +
               to_string(mu) + " at k=" + std::to_string(k));
  std::lock_guard lock(reg.mu);
  reg.klr.emplace(key, out);
  return out;
}

}  // namespace kschur
