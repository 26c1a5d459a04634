#include <exckit/compositions.hpp>

#include <exckit/combinatorics.hpp>

#include <algorithm>
#include <sstream>

namespace exckit {

DoublingPattern DoublingPattern::prefix(int h) {
  if (h < 0) throw std::invalid_argument("DoublingPattern::prefix: negative length");
  DoublingPattern p;
  p.is_prefix_ = true;
  p.prefix_len_ = h;
  return p;
}

DoublingPattern DoublingPattern::subset(std::vector<int> indices) {
  std::sort(indices.begin(), indices.end());
  if (!indices.empty() && indices.front() < 0)
    throw std::invalid_argument("DoublingPattern::subset: negative index");
  if (std::adjacent_find(indices.begin(), indices.end()) != indices.end())
    throw std::invalid_argument("DoublingPattern::subset: duplicate index");
  DoublingPattern p;
  p.is_prefix_ = false;
  p.subset_ = std::move(indices);
  return p;
}

int DoublingPattern::prefix_length() const {
  if (!is_prefix_) throw std::logic_error("DoublingPattern: not a prefix pattern");
  return prefix_len_;
}

const std::vector<int>& DoublingPattern::indices() const {
  if (is_prefix_) throw std::logic_error("DoublingPattern: not a subset pattern");
  return subset_;
}

bool DoublingPattern::doubles(int index) const {
  if (is_prefix_) return index < prefix_len_;
  return std::binary_search(subset_.begin(), subset_.end(), index);
}

void DoublingPattern::validate(std::size_t len) const {
  const int limit = static_cast<int>(len);
  if (is_prefix_) {
    if (prefix_len_ > limit)
      throw std::invalid_argument("DoublingPattern: " + describe() +
                                  " exceeds vector length " + std::to_string(len));
  } else if (!subset_.empty() && subset_.back() >= limit) {
    throw std::invalid_argument("DoublingPattern: " + describe() +
                                " exceeds vector length " + std::to_string(len));
  }
}

std::vector<Degree> DoublingPattern::apply(std::span<const Degree> a) const {
  validate(a.size());
  std::vector<Degree> out(a.begin(), a.end());
  for (std::size_t i = 0; i < out.size(); ++i)
    if (doubles(static_cast<int>(i))) out[i] *= 2;
  return out;
}

std::string DoublingPattern::describe() const {
  if (is_prefix_) return "prefix=" + std::to_string(prefix_len_);
  std::ostringstream out;
  out << "subset={";
  for (std::size_t i = 0; i < subset_.size(); ++i) {
    if (i > 0) out << ',';
    out << subset_[i] + 1;
  }
  out << '}';
  return out.str();
}

std::vector<Composition> compositions(int parts, int total) {
  std::vector<Composition> out;
  for_each_composition(parts, total, [&](const Composition& m) { out.push_back(m); });
  return out;
}

std::vector<Composition> weighted_compositions(const DoublingPattern& pattern, int parts,
                                               int total) {
  if (!pattern.is_prefix())
    throw std::invalid_argument("weighted_compositions: requires a prefix pattern");
  if (parts >= 0) pattern.validate(static_cast<std::size_t>(parts));
  std::vector<Composition> out;
  for_each_weighted_composition(pattern.prefix_length(), parts, total,
                                [&](const Composition& m) { out.push_back(m); });
  return out;
}

std::vector<Composition> exponent_set(int parts, int degree) {
  return compositions(parts, degree);
}

Int composition_count(int parts, int total) {
  detail::check_enum_args(parts, total);
  if (parts == 0) return Int(total == 0 ? 1 : 0);
  return binomial(static_cast<long long>(total) + parts - 1, static_cast<long long>(parts) - 1);
}

}  // namespace exckit
