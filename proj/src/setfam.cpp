#include "reflexpm/setfam.hpp"

#include <algorithm>
#include <sstream>

#include "reflexpm/errors.hpp"

namespace reflexpm {

void check_ground_size(int d) {
  if (d < 1 || d > kMaxGroundSize) {
    throw InputError("ground set size d=" + std::to_string(d) + " outside 1.." +
                     std::to_string(kMaxGroundSize));
  }
}

Subset::Subset(int d, Mask mask) : d_(d), mask_(mask) {
  check_ground_size(d);
  if (mask > full_mask(d)) {
    throw InputError("subset mask " + std::to_string(mask) + " out of range for d=" +
                     std::to_string(d));
  }
}

Subset Subset::from_elements(int d, const std::vector<int>& elements) {
  check_ground_size(d);
  Mask mask = 0;
  for (int e : elements) {
    if (e < 1 || e > d) {
      throw InputError("element " + std::to_string(e) + " outside [" + std::to_string(d) + "]");
    }
    mask |= Mask{1} << (e - 1);
  }
  return {d, mask};
}

std::vector<int> Subset::elements() const {
  std::vector<int> out;
  for (int i = 0; i < d_; ++i) {
    if ((mask_ >> i) & 1U) out.push_back(i + 1);
  }
  return out;
}

std::string Subset::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int e : elements()) {
    if (!first) os << ',';
    os << e;
    first = false;
  }
  os << '}';
  return os.str();
}

std::strong_ordering Subset::operator<=>(const Subset& o) const noexcept {
  if (auto c = d_ <=> o.d_; c != 0) return c;
  if (auto c = size() <=> o.size(); c != 0) return c;
  return mask_ <=> o.mask_;
}

SetFamily::SetFamily(int d, std::vector<Mask> masks) : d_(d), masks_(std::move(masks)) {
  check_ground_size(d);
  const Mask full = full_mask(d);
  for (Mask m : masks_) {
    if (m > full) {
      throw InputError("subset mask " + std::to_string(m) + " out of range for d=" +
                       std::to_string(d));
    }
  }
  std::sort(masks_.begin(), masks_.end(), canonical_less);
  masks_.erase(std::unique(masks_.begin(), masks_.end()), masks_.end());
}

namespace {
std::vector<Mask> masks_of(int d, const std::vector<Subset>& sets) {
  std::vector<Mask> out;
  out.reserve(sets.size());
  for (const auto& s : sets) {
    if (s.d() != d) throw InputError("subset ground size does not match family");
    out.push_back(s.mask());
  }
  return out;
}
}  // namespace

SetFamily::SetFamily(int d, const std::vector<Subset>& sets) : SetFamily(d, masks_of(d, sets)) {}

std::vector<Subset> SetFamily::sets() const {
  std::vector<Subset> out;
  out.reserve(masks_.size());
  for (Mask m : masks_) out.emplace_back(d_, m);
  return out;
}

bool SetFamily::contains(Mask mask) const noexcept {
  return std::binary_search(masks_.begin(), masks_.end(), mask, canonical_less);
}

SetFamily SetFamily::without_empty() const {
  std::vector<Mask> m;
  std::copy_if(masks_.begin(), masks_.end(), std::back_inserter(m), [](Mask x) { return x != 0; });
  return {d_, std::move(m)};
}

SetFamily SetFamily::with_empty() const {
  auto m = masks_;
  m.push_back(0);
  return {d_, std::move(m)};
}

std::string SetFamily::to_string() const {
  std::string out = "{";
  for (std::size_t k = 0; k < masks_.size(); ++k) {
    if (k != 0) out += ',';
    out += Subset(d_, masks_[k]).to_string();
  }
  out += '}';
  return out;
}

std::strong_ordering SetFamily::operator<=>(const SetFamily& o) const noexcept {
  if (auto c = d_ <=> o.d_; c != 0) return c;
  return std::lexicographical_compare_three_way(masks_.begin(), masks_.end(), o.masks_.begin(),
                                                o.masks_.end());
}

namespace {

// Membership bitmap over all 2^d subsets.
std::vector<bool> membership(const SetFamily& f) {
  std::vector<bool> in(std::size_t{1} << f.d(), false);
  for (Mask m : f.masks()) in[m] = true;
  return in;
}

bool closed_under_meet_join(const std::vector<Mask>& masks, const std::vector<bool>& in) {
  for (std::size_t a = 0; a < masks.size(); ++a) {
    for (std::size_t b = a + 1; b < masks.size(); ++b) {
      if (!in[masks[a] | masks[b]] || !in[masks[a] & masks[b]]) return false;
    }
  }
  return true;
}

}  // namespace

bool is_sublattice(const SetFamily& family) {
  if (!family.contains(Mask{0}) || !family.contains(full_mask(family.d()))) return false;
  return closed_under_meet_join(family.masks(), membership(family));
}

SetFamily lattice_closure(const SetFamily& family) {
  const int d = family.d();
  std::vector<bool> in = membership(family);
  std::vector<Mask> members = family.masks();
  auto add = [&](Mask m) {
    if (!in[m]) {
      in[m] = true;
      members.push_back(m);
    }
  };
  add(0);
  add(full_mask(d));
  // Pairs are revisited only against newly added members.
  for (std::size_t next = 0; next < members.size(); ++next) {
    for (std::size_t other = 0; other < next; ++other) {
      add(members[next] | members[other]);
      add(members[next] & members[other]);
    }
  }
  return {d, std::move(members)};
}

void for_each_sublattice(int d, const std::function<void(const SetFamily&)>& visit) {
  if (d < 1 || d > kMaxSublatticeGroundSize) {
    throw CapabilityError("sublattice enumeration supports 1 <= d <= " +
                          std::to_string(kMaxSublatticeGroundSize) + ", got d=" +
                          std::to_string(d));
  }
  const Mask full = full_mask(d);
  std::vector<Mask> middle;
  for (Mask m = 1; m < full; ++m) middle.push_back(m);
  std::sort(middle.begin(), middle.end(), canonical_less);

  std::vector<SetFamily> found;
  const std::uint64_t choices = std::uint64_t{1} << middle.size();
  for (std::uint64_t pick = 0; pick < choices; ++pick) {
    std::vector<Mask> masks{0};
    for (std::size_t k = 0; k < middle.size(); ++k) {
      if ((pick >> k) & 1U) masks.push_back(middle[k]);
    }
    masks.push_back(full);
    SetFamily f(d, std::move(masks));
    if (closed_under_meet_join(f.masks(), membership(f))) found.push_back(std::move(f));
  }
  std::sort(found.begin(), found.end());
  for (const auto& f : found) visit(f);
}

std::vector<SetFamily> enumerate_sublattices(int d) {
  std::vector<SetFamily> out;
  for_each_sublattice(d, [&](const SetFamily& f) { out.push_back(f); });
  return out;
}

SetFamily chain_sublattice(int d) {
  check_ground_size(d);
  std::vector<Mask> masks{0};
  Mask m = 0;
  for (int i = d; i >= 1; --i) {
    m |= Mask{1} << (i - 1);
    masks.push_back(m);
  }
  return {d, std::move(masks)};
}

}  // namespace reflexpm
