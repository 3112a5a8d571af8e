#include "comsep/sign_vector.hpp"

#include <unordered_set>

namespace comsep {

char to_char(Sign s) {
  switch (s) {
    case Sign::plus:
      return '+';
    case Sign::minus:
      return '-';
    case Sign::zero:
      break;
  }
  return '0';
}

Sign sign_from_char(char c) {
  switch (c) {
    case '+':
      return Sign::plus;
    case '-':
      return Sign::minus;
    case '0':
      return Sign::zero;
    default:
      throw Error(std::string("invalid sign character '") + c + "'");
  }
}

ElementSet::ElementSet(std::initializer_list<std::size_t> indices) {
  for (auto i : indices) {
    if (i >= GroundSet::max_size) throw Error("element index out of range");
    insert(i);
  }
}

std::vector<std::size_t> ElementSet::indices() const {
  std::vector<std::size_t> out;
  out.reserve(size());
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
  return out;
}

bool operator<(ElementSet a, ElementSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  const std::uint64_t diff = a.bits_ ^ b.bits_;
  if (diff == 0) return false;
  return (a.bits_ & (diff & -diff)) != 0;
}

GroundSet::GroundSet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.size() > max_size) throw Error("ground set exceeds 64 elements");
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) throw Error("empty element identifier");
    if (!index_.emplace(names_[i], i).second) throw Error("duplicate element identifier '" + names_[i] + "'");
  }
}

GroundPtr GroundSet::indexed(std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) names.push_back("e" + std::to_string(i));
  return std::make_shared<const GroundSet>(std::move(names));
}

std::size_t GroundSet::index_of(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) throw Error("unknown element '" + std::string(id) + "'");
  return it->second;
}

ElementSet GroundSet::subset(const std::vector<std::string>& ids) const {
  ElementSet s;
  for (const auto& id : ids) s.insert(index_of(id));
  return s;
}

std::vector<std::string> GroundSet::names_of(ElementSet s) const {
  std::vector<std::string> out;
  for (auto i : s.indices()) out.push_back(name(i));
  return out;
}

GroundPtr GroundSet::without(ElementSet removed) const {
  std::vector<std::string> kept;
  for (std::size_t i = 0; i < size(); ++i)
    if (!removed.contains(i)) kept.push_back(names_[i]);
  return std::make_shared<const GroundSet>(std::move(kept));
}

bool same_ground(const GroundPtr& a, const GroundPtr& b) { return a == b || *a == *b; }

std::uint64_t compress_bits(std::uint64_t mask, std::uint64_t keep) {
  std::uint64_t out = 0;
  unsigned pos = 0;
  for (std::uint64_t k = keep; k != 0; k &= k - 1, ++pos) {
    const std::uint64_t low = k & -k;
    if (mask & low) out |= std::uint64_t{1} << pos;
  }
  return out;
}

void require_subset(const GroundSet& ground, ElementSet s, const char* what) {
  if (!s.is_subset_of(ground.all())) throw Error(std::string(what) + " is not a subset of the ground set");
}

SignVector::SignVector(GroundPtr ground, std::uint64_t plus, std::uint64_t minus)
    : ground_(std::move(ground)), plus_(plus), minus_(minus) {
  if (!ground_) throw Error("sign vector without ground set");
  if ((plus_ & minus_) != 0) throw Error("element carries both signs");
  if (((plus_ | minus_) & ~ground_->all().bits()) != 0) throw Error("sign vector entries outside the ground set");
}

SignVector::SignVector(GroundPtr ground) : SignVector(std::move(ground), 0, 0) {}

SignVector SignVector::parse(GroundPtr ground, std::string_view text) {
  if (text.size() != ground->size())
    throw Error("sign vector '" + std::string(text) + "' has length " + std::to_string(text.size()) +
                ", expected " + std::to_string(ground->size()));
  std::uint64_t plus = 0, minus = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (sign_from_char(text[i])) {
      case Sign::plus:
        plus |= std::uint64_t{1} << i;
        break;
      case Sign::minus:
        minus |= std::uint64_t{1} << i;
        break;
      case Sign::zero:
        break;
    }
  }
  return SignVector(std::move(ground), plus, minus);
}

Sign SignVector::operator[](std::size_t i) const {
  if ((plus_ >> i) & 1u) return Sign::plus;
  if ((minus_ >> i) & 1u) return Sign::minus;
  return Sign::zero;
}

std::string SignVector::to_string() const {
  std::string s(size(), '0');
  for (std::size_t i = 0; i < s.size(); ++i) s[i] = to_char((*this)[i]);
  return s;
}

bool operator==(const SignVector& a, const SignVector& b) {
  return a.plus_ == b.plus_ && a.minus_ == b.minus_ && same_ground(a.ground_, b.ground_);
}

bool canonical_less(std::uint64_t plus_a, std::uint64_t minus_a, std::uint64_t plus_b, std::uint64_t minus_b) {
  const std::uint64_t diff = (plus_a ^ plus_b) | (minus_a ^ minus_b);
  if (diff == 0) return false;
  const std::uint64_t low = diff & -diff;
  auto rank = [low](std::uint64_t p, std::uint64_t m) { return (p & low) ? 0 : (m & low) ? 1 : 2; };
  return rank(plus_a, minus_a) < rank(plus_b, minus_b);
}

bool operator<(const SignVector& a, const SignVector& b) {
  return canonical_less(a.plus_, a.minus_, b.plus_, b.minus_);
}

namespace {

void require_same_ground(const SignVector& x, const SignVector& y) {
  if (!same_ground(x.ground(), y.ground())) throw Error("sign vectors live on different ground sets");
}

}  // namespace

SignVector compose(const SignVector& x, const SignVector& y) {
  require_same_ground(x, y);
  const std::uint64_t free = ~(x.plus_mask() | x.minus_mask());
  return SignVector(x.ground(), x.plus_mask() | (y.plus_mask() & free), x.minus_mask() | (y.minus_mask() & free));
}

SignVector negate(const SignVector& x) { return SignVector(x.ground(), x.minus_mask(), x.plus_mask()); }

ElementSet separator(const SignVector& x, const SignVector& y) {
  require_same_ground(x, y);
  return ElementSet((x.plus_mask() & y.minus_mask()) | (x.minus_mask() & y.plus_mask()));
}

ElementSet support(const SignVector& x) { return ElementSet(x.plus_mask() | x.minus_mask()); }

SignVector restrict_vector(const SignVector& x, ElementSet removed) {
  require_subset(*x.ground(), removed, "restriction set");
  if (removed.empty()) return x;
  const std::uint64_t keep = x.ground()->all().bits() & ~removed.bits();
  return SignVector(x.ground()->without(removed), compress_bits(x.plus_mask(), keep),
                    compress_bits(x.minus_mask(), keep));
}

SignVector reorient_vector(const SignVector& x, ElementSet flipped) {
  require_subset(*x.ground(), flipped, "reorientation set");
  const std::uint64_t f = flipped.bits();
  return SignVector(x.ground(), (x.plus_mask() & ~f) | (x.minus_mask() & f),
                    (x.minus_mask() & ~f) | (x.plus_mask() & f));
}

}  // namespace comsep
