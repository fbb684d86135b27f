#include "wassign/instances.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <random>
#include <sstream>

namespace wassign {

std::string format_double(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

namespace {

double parse_number(const std::string& tok, int line) {
  double v;
  auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (res.ec != std::errc{} || res.ptr != tok.data() + tok.size())
    throw ParseError("bad number '" + tok + "'", line);
  return v;
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

}  // namespace

Instance parse_instance(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  int lineno = 0;

  auto next_line = [&]() -> std::string {
    while (std::getline(is, line)) {
      ++lineno;
      if (!split_ws(line).empty()) return line;
    }
    throw ParseError("unexpected end of input", lineno + 1);
  };

  auto header = split_ws(next_line());
  if (header.size() != 2) throw ParseError("expected 'n k' header", lineno);
  const double nd = parse_number(header[0], lineno);
  const double kd = parse_number(header[1], lineno);
  const int n = static_cast<int>(nd), k = static_cast<int>(kd);
  if (nd != n || kd != k || n < 1) throw ParseError("bad n or k", lineno);
  if (k < 1) throw ParseError("weight list must be nonempty", lineno);
  if (k > n) throw ParseError("k exceeds n", lineno);

  Instance inst;
  for (int i = 0; i < n; ++i) {
    auto toks = split_ws(next_line());
    if (toks.size() != 2) throw ParseError("expected 'x y'", lineno);
    inst.points.push_back({parse_number(toks[0], lineno), parse_number(toks[1], lineno)});
  }
  for (int i = 0; i < k; ++i) {
    auto toks = split_ws(next_line());
    if (toks.size() != 1) throw ParseError("expected one weight", lineno);
    const double w = parse_number(toks[0], lineno);
    if (!(w > 0.0)) throw ParseError("weight must be positive", lineno);
    inst.weights.push_back(w);
  }
  validate_instance(inst);
  return inst;
}

std::string serialize_instance(const Instance& inst) {
  std::string out = std::to_string(inst.n()) + " " + std::to_string(inst.k()) + "\n";
  for (const Point& p : inst.points)
    out += format_double(p.x) + " " + format_double(p.y) + "\n";
  for (double w : inst.weights) out += format_double(w) + "\n";
  return out;
}

Instance load_instance(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_instance(ss.str());
}

void save_instance(const Instance& inst, const std::string& path) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write '" + path + "'");
  f << serialize_instance(inst);
}

Instance gen_random(const GeneratorSpec& spec) {
  if (spec.n < 1 || spec.k < 1 || spec.k > spec.n)
    throw std::invalid_argument("bad generator parameters");
  if (!(spec.weight_lo > 0.0) || spec.weight_lo > spec.weight_hi)
    throw std::invalid_argument("bad weight range");
  std::mt19937_64 rng(spec.seed);
  // mt19937_64 output is standardized; avoid distribution objects so the
  // bytes are identical across standard libraries.
  auto uniform01 = [&]() { return (rng() >> 11) * 0x1.0p-53; };
  Instance inst;
  for (int i = 0; i < spec.n; ++i)
    inst.points.push_back({uniform01(), uniform01()});
  for (int i = 0; i < spec.k; ++i)
    inst.weights.push_back(spec.weight_lo +
                           uniform01() * (spec.weight_hi - spec.weight_lo));
  return inst;
}

Instance gen_lower_bound(int n, int k) {
  if (n < 8) throw std::invalid_argument("gen_lower_bound requires n >= 8");
  if (k < 1 || k > n / 4)
    throw std::invalid_argument("gen_lower_bound requires 1 <= k <= n/4");

  const double pi = std::acos(-1.0);
  Instance inst;
  const int inner = n / 4;
  for (int i = 0; i < inner; ++i) {
    const double a = 2.0 * pi * i / inner;
    inst.points.push_back({0.3 * std::cos(a), 0.3 * std::sin(a)});
  }
  const int outer = n - inner;
  const double centers[3] = {pi / 2.0, 7.0 * pi / 6.0, 11.0 * pi / 6.0};
  int sizes[3] = {outer / 3, outer / 3, outer / 3};
  for (int i = 0; i < outer % 3; ++i) ++sizes[i];
  for (int g = 0; g < 3; ++g) {
    for (int j = 0; j < sizes[g]; ++j) {
      const double off =
          sizes[g] == 1 ? 0.0 : -0.005 + 0.01 * j / (sizes[g] - 1);
      const double a = centers[g] + off;
      inst.points.push_back({std::cos(a), std::sin(a)});
    }
  }
  const double eps = 1.0 / (8.0 * k);
  for (int i = 1; i <= k; ++i) inst.weights.push_back(0.5 - i * eps);
  return inst;
}

namespace {

// Ordered weight tuples drawn from the distinct values of W1 that are
// realizable as a sub-multiset.
bool tuple_available(const std::vector<double>& w1,
                     const std::vector<double>& tuple) {
  std::vector<double> rem = w1;
  for (double w : tuple) {
    auto it = std::lower_bound(rem.begin(), rem.end(), w);
    if (it == rem.end() || *it != w) return false;
    rem.erase(it);
  }
  return true;
}

}  // namespace

long count_distinct_centers(const Instance& inst) {
  validate_instance(inst);
  const int n = inst.n();
  if (n == 1) return 1;

  const auto w1 = sorted_w1(inst);
  const auto vals = distinct_values(w1);
  double scale = 1.0;
  for (const Point& p : inst.points) scale = std::max({scale, std::abs(p.x), std::abs(p.y)});
  const double tol = 1e-9 * scale;

  std::vector<Point> centers;
  auto record = [&](Point c) {
    for (const Point& o : centers)
      if (dist(o, c) <= tol) return;
    centers.push_back(c);
  };

  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (double wa : vals) {
        for (double wb : vals) {
          if (!tuple_available(w1, {wa, wb})) continue;
          const WeightedPoint a{inst.points[i], wa}, b{inst.points[j], wb};
          const auto cand = weighted_center_of_pair(a, b);
          if (cand.degenerate) continue;
          if (validate_candidate(cand.center, cand.radius, inst,
                                 {{i, wa}, {j, wb}}))
            record(cand.center);
        }
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int l = j + 1; l < n; ++l) {
        for (double wa : vals) {
          for (double wb : vals) {
            for (double wc : vals) {
              if (!tuple_available(w1, {wa, wb, wc})) continue;
              const WeightedPoint a{inst.points[i], wa}, b{inst.points[j], wb},
                  c{inst.points[l], wc};
              for (const auto& e : equidistant_points_of_triple(a, b, c)) {
                if (!is_center_of_triple(e.center, a, b, c)) continue;
                if (validate_candidate(e.center, e.radius, inst,
                                       {{i, wa}, {j, wb}, {l, wc}}))
                  record(e.center);
              }
            }
          }
        }
      }
    }
  }
  return static_cast<long>(centers.size());
}

}  // namespace wassign
