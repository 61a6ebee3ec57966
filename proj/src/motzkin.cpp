#include "coinv/motzkin.hpp"

#include <bit>
#include <stdexcept>

namespace coinv {

PositionSet PositionSet::from_elements(int n, const std::vector<int>& elements) {
  PositionSet s{n, 0};
  for (int e : elements) {
    if (e < 1 || e > n) throw std::invalid_argument("position outside [1, n]");
    s.mask |= 1U << (e - 1);
  }
  return s;
}

int PositionSet::count() const { return std::popcount(mask); }

std::vector<int> PositionSet::elements() const {
  std::vector<int> out;
  for (int i = 1; i <= n; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

std::string PositionSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int e : elements()) {
    if (!first) out += ",";
    out += std::to_string(e);
    first = false;
  }
  return out + "}";
}

int step_delta(Step s) {
  switch (s) {
    case Step::Up:
      return 1;
    case Step::Down:
      return -1;
    default:
      return 0;
  }
}

char step_letter(Step s) {
  switch (s) {
    case Step::Up:
      return 'U';
    case Step::HorizTheta:
      return 'T';
    case Step::HorizXi:
      return 'X';
    case Step::Down:
      return 'D';
  }
  return '?';
}

bool is_valid_path(const std::vector<Step>& steps, PathVariant variant) {
  if (variant == PathVariant::TypeA && (steps.empty() || steps.front() != Step::Up)) return false;
  const int floor = variant == PathVariant::TypeA ? 1 : 0;
  int h = 0;
  for (Step s : steps) {
    h += step_delta(s);
    if (h < floor) return false;
  }
  return true;
}

MotzkinPath::MotzkinPath(std::vector<Step> steps, PathVariant variant) : steps_(std::move(steps)), variant_(variant) {
  if (steps_.size() > 32) throw std::invalid_argument("path too long");
  if (!is_valid_path(steps_, variant_)) throw std::invalid_argument("path violates its height floor");
}

int MotzkinPath::height_after(int i) const {
  if (i < 0 || i > length()) throw std::out_of_range("height_after: index out of range");
  int h = 0;
  for (int k = 0; k < i; ++k) h += step_delta(steps_[k]);
  return h;
}

PositionSet MotzkinPath::theta_set() const {
  PositionSet s{length(), 0};
  for (int i = 0; i < length(); ++i)
    if (steps_[i] == Step::HorizTheta || steps_[i] == Step::Down) s.mask |= 1U << i;
  return s;
}

PositionSet MotzkinPath::xi_set() const {
  PositionSet s{length(), 0};
  for (int i = 0; i < length(); ++i)
    if (steps_[i] == Step::HorizXi || steps_[i] == Step::Down) s.mask |= 1U << i;
  return s;
}

std::string MotzkinPath::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    if (i) out += ' ';
    out += step_letter(steps_[i]);
  }
  return out;
}

MotzkinPath MotzkinPath::parse(std::string_view text, PathVariant variant) {
  std::vector<Step> steps;
  for (char c : text) {
    switch (c) {
      case 'U':
        steps.push_back(Step::Up);
        break;
      case 'T':
        steps.push_back(Step::HorizTheta);
        break;
      case 'X':
        steps.push_back(Step::HorizXi);
        break;
      case 'D':
        steps.push_back(Step::Down);
        break;
      case ' ':
        break;
      default:
        throw std::invalid_argument(std::string("unknown step letter '") + c + "'");
    }
  }
  return MotzkinPath(std::move(steps), variant);
}

MotzkinPath MotzkinPath::from_sets(const PositionSet& theta, const PositionSet& xi, PathVariant variant) {
  if (theta.n != xi.n) throw std::invalid_argument("theta/xi sets disagree on n");
  std::vector<Step> steps(theta.n);
  for (int i = 1; i <= theta.n; ++i) {
    const bool t = theta.contains(i);
    const bool x = xi.contains(i);
    steps[i - 1] = t ? (x ? Step::Down : Step::HorizTheta) : (x ? Step::HorizXi : Step::Up);
  }
  return MotzkinPath(std::move(steps), variant);
}

namespace {

void paths_rec(int n, int floor, int height, std::vector<Step>& prefix, PathVariant variant,
               const std::function<void(const MotzkinPath&)>& visit) {
  if (static_cast<int>(prefix.size()) == n) {
    visit(MotzkinPath(prefix, variant));
    return;
  }
  for (Step s : {Step::Up, Step::HorizTheta, Step::HorizXi, Step::Down}) {
    const int h = height + step_delta(s);
    if (h < floor) continue;
    prefix.push_back(s);
    paths_rec(n, floor, h, prefix, variant, visit);
    prefix.pop_back();
  }
}

}  // namespace

void for_each_path(int n, PathVariant variant, const std::function<void(const MotzkinPath&)>& visit) {
  if (n < 0) throw std::invalid_argument("path length must be nonnegative");
  if (n > 32) throw std::invalid_argument("path length too large");
  std::vector<Step> prefix;
  if (variant == PathVariant::TypeA) {
    if (n == 0) throw std::invalid_argument("type A paths need n >= 1");
    prefix.push_back(Step::Up);
    paths_rec(n, 1, 1, prefix, variant, visit);
  } else {
    paths_rec(n, 0, 0, prefix, variant, visit);
  }
}

std::vector<MotzkinPath> enumerate_paths(int n, PathVariant variant) {
  std::vector<MotzkinPath> out;
  for_each_path(n, variant, [&](const MotzkinPath& p) { out.push_back(p); });
  return out;
}

}  // namespace coinv
