#include "kschur/partition.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <numeric>
#include <sstream>
#include <utility>

#include "kschur/errors.hpp"

namespace kschur {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0)
      fail_precondition("partition parts must be positive: " +
                        to_string(std::span<const int>(parts_)));
    if (i > 0 && parts_[i] > parts_[i - 1])
      fail_precondition("partition parts must be weakly decreasing: " +
                        to_string(std::span<const int>(parts_)));
  }
}

int Partition::degree() const noexcept {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

SkewShape::SkewShape(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
  require(kschur::contains(outer_, inner_),
          "skew shape inner " + to_string(inner_) + " not contained in outer " +
              to_string(outer_));
}

bool SkewShape::contains(Cell c) const noexcept {
  if (c.row < 1 || c.col < 1) return false;
  const auto i = static_cast<std::size_t>(c.row - 1);
  return inner_.part(i) < c.col && c.col <= outer_.part(i);
}

Partition conjugate(const Partition& p) {
  std::vector<int> out(static_cast<std::size_t>(p.largest()), 0);
  for (int x : p.parts())
    for (int j = 0; j < x; ++j) ++out[static_cast<std::size_t>(j)];
  return Partition(std::move(out));
}

bool contains(const Partition& outer, const Partition& inner) {
  if (inner.length() > outer.length()) return false;
  for (std::size_t i = 0; i < inner.parts().size(); ++i)
    if (inner.part(i) > outer.part(i)) return false;
  return true;
}

bool dominates(const Partition& a, const Partition& b) {
  if (a.degree() != b.degree()) return false;
  const auto len = static_cast<std::size_t>(std::max(a.length(), b.length()));
  int sa = 0, sb = 0;
  for (std::size_t i = 0; i < len; ++i) {
    sa += a.part(i);
    sb += b.part(i);
    if (sa < sb) return false;
  }
  return true;
}

int hook_length(const SkewShape& shape, Cell s) {
  const Partition& outer = shape.outer();
  const Partition& inner = shape.inner();
  const auto r = static_cast<std::size_t>(s.row - 1);
  require(s.row >= 1 && s.col >= 1 && s.col <= outer.part(r),
          "cell outside the outer diagram");
  int h = shape.contains(s) ? 1 : 0;
  for (int j = s.col + 1; j <= outer.part(r); ++j)
    if (j > inner.part(r)) ++h;
  for (std::size_t i = r + 1; i < outer.parts().size(); ++i)
    if (inner.part(i) < s.col && s.col <= outer.part(i)) ++h;
  return h;
}

int hook_length(const Partition& p, Cell s) {
  const auto r = static_cast<std::size_t>(s.row - 1);
  require(s.row >= 1 && s.col >= 1 && s.col <= p.part(r),
          "cell outside the diagram");
  int leg = 0;
  for (std::size_t i = r + 1; i < p.parts().size() && p.part(i) >= s.col; ++i)
    ++leg;
  return p.part(r) - s.col + leg + 1;
}

int main_hook(const Partition& p) {
  return p.empty() ? 0 : p.largest() + p.length() - 1;
}

bool is_horizontal_strip(const Partition& outer, const Partition& inner) {
  if (!contains(outer, inner)) return false;
  for (std::size_t i = 0; i + 1 < outer.parts().size(); ++i)
    if (outer.part(i + 1) > inner.part(i)) return false;
  return true;
}

bool is_vertical_strip(const Partition& outer, const Partition& inner) {
  if (!contains(outer, inner)) return false;
  for (std::size_t i = 0; i < outer.parts().size(); ++i)
    if (outer.part(i) - inner.part(i) > 1) return false;
  return true;
}

namespace {
void check_grassmannian(int l, int n) {
  require(1 <= l && l < n, "need 1 <= l < n (got l=" + std::to_string(l) +
                               ", n=" + std::to_string(n) + ")");
}
}  // namespace

bool in_rectangle(const Partition& p, int l, int n) {
  check_grassmannian(l, n);
  return p.largest() <= l && p.length() <= n - l;
}

bool in_Pi(const Partition& p, int l, int n) {
  check_grassmannian(l, n);
  if (p.largest() > l) return false;
  const auto short_rows = std::count_if(p.parts().begin(), p.parts().end(),
                                        [l](int x) { return x < l; });
  return short_rows <= n - l;
}

std::vector<Partition> enumerate_bounded(int n, int k) {
  require(n >= 0, "degree must be nonnegative");
  require(k >= 1, "bound k must be at least 1");
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int maxpart) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int x = std::min(remaining, maxpart); x >= 1; --x) {
      cur.push_back(x);
      rec(remaining - x, x);
      cur.pop_back();
    }
  };
  rec(n, k);
  return out;
}

std::vector<Partition> enumerate_partitions(int n) {
  return enumerate_bounded(n, std::max(n, 1));
}

std::vector<Partition> enumerate_in_box(int rows, int cols) {
  std::vector<Partition> out;
  for (int d = 0; d <= rows * cols; ++d)
    for (auto& p : enumerate_bounded(d, std::max(cols, 1)))
      if (p.length() <= rows && p.largest() <= cols) out.push_back(p);
  return out;
}

Partition sort_to_partition(std::span<const int> composition) {
  std::vector<int> v(composition.begin(), composition.end());
  std::erase(v, 0);
  std::sort(v.begin(), v.end(), std::greater<>());
  return Partition(std::move(v));
}

std::string to_string(std::span<const int> seq) {
  std::string s = "[";
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(seq[i]);
  }
  s += ']';
  return s;
}

std::string to_string(const Partition& p) { return to_string(p.view()); }

std::vector<int> parse_sequence(std::string_view text) {
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  skip_ws();
  if (i >= text.size() || text[i] != '[')
    throw ParseError("expected '[' in '" + std::string(text) + "'");
  ++i;
  std::vector<int> out;
  skip_ws();
  if (i < text.size() && text[i] == ']') {
    ++i;
  } else {
    while (true) {
      skip_ws();
      int v = 0;
      auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), v);
      if (ec != std::errc())
        throw ParseError("expected an integer in '" + std::string(text) + "'");
      i = static_cast<std::size_t>(ptr - text.data());
      out.push_back(v);
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i < text.size() && text[i] == ']') {
        ++i;
        break;
      }
      throw ParseError("expected ',' or ']' in '" + std::string(text) + "'");
    }
  }
  skip_ws();
  if (i != text.size())
    throw ParseError("trailing characters in '" + std::string(text) + "'");
  for (int v : out)
    if (v < 0) throw ParseError("negative entry in '" + std::string(text) + "'");
  return out;
}

Partition parse_partition(std::string_view text) {
  auto parts = parse_sequence(text);
  try {
    return Partition(std::move(parts));
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
}

std::ostream& operator<<(std::ostream& os, const Partition& p) {
  return os << to_string(p);
}

}  // namespace kschur
