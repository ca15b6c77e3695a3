#include "cascade/support_type.hpp"

#include <charconv>
#include <stdexcept>

namespace cascade {

SupportType SupportType::a(int r) {
  if (r < 2) throw std::invalid_argument("type A needs r >= 2");
  return {Kind::A, Delta::SameRow, r, 0};
}

SupportType SupportType::b(int r, Delta delta) {
  if (r < 1) throw std::invalid_argument("type B needs r >= 1");
  return {Kind::B, delta, r, 0};
}

SupportType SupportType::c(Delta delta, int r) {
  if (r < 1) throw std::invalid_argument("type C needs r >= 1");
  return {Kind::C, delta, 0, r};
}

SupportType SupportType::d(int r, Delta delta, int s) {
  if (r < 1 || s < 1) throw std::invalid_argument("type D needs r, s >= 1");
  return {Kind::D, delta, r, s};
}

int SupportType::size() const { return kind_ == Kind::A ? above_ : above_ + below_ + 2; }

SupportType SupportType::mirrored() const {
  switch (kind_) {
    case Kind::A:
      return *this;
    case Kind::B:
      return c(delta_, above_);
    case Kind::C:
      return b(below_, delta_);
    case Kind::D:
      return d(below_, delta_, above_);
  }
  return *this;
}

std::string SupportType::key() const {
  const char* bar = delta_ == Delta::SameRow ? "|" : "||";
  switch (kind_) {
    case Kind::A:
      return "A" + std::to_string(above_);
    case Kind::B:
      return "B" + std::to_string(above_) + bar;
    case Kind::C:
      return std::string("C") + bar + std::to_string(below_);
    case Kind::D:
      return "D" + std::to_string(above_) + bar + std::to_string(below_);
  }
  return {};
}

namespace {

// Parses a positive integer prefix of `text`, advancing it.
std::optional<int> take_int(std::string_view& text) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr == text.data()) return std::nullopt;
  text.remove_prefix(static_cast<std::size_t>(ptr - text.data()));
  return value;
}

std::optional<Delta> take_delta(std::string_view& text) {
  if (text.starts_with("||")) {
    text.remove_prefix(2);
    return Delta::DiffRow;
  }
  if (text.starts_with("|")) {
    text.remove_prefix(1);
    return Delta::SameRow;
  }
  return std::nullopt;
}

}  // namespace

std::optional<SupportType> SupportType::parse(std::string_view key) {
  if (key.empty()) return std::nullopt;
  const char kind = key.front();
  key.remove_prefix(1);
  try {
    std::optional<SupportType> out;
    if (kind == 'A') {
      auto r = take_int(key);
      if (r) out = a(*r);
    } else if (kind == 'B') {
      auto r = take_int(key);
      auto delta = take_delta(key);
      if (r && delta) out = b(*r, *delta);
    } else if (kind == 'C') {
      auto delta = take_delta(key);
      auto r = take_int(key);
      if (r && delta) out = c(*delta, *r);
    } else if (kind == 'D') {
      auto r = take_int(key);
      auto delta = take_delta(key);
      auto s = take_int(key);
      if (r && delta && s) out = d(*r, *delta, *s);
    }
    if (!key.empty()) return std::nullopt;
    return out;
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

std::vector<SupportType> types_for_level(int k) {
  std::vector<SupportType> out;
  for (int r = 2; r <= k + 2; ++r) out.push_back(SupportType::a(r));
  for (Delta delta : {Delta::SameRow, Delta::DiffRow}) {
    for (int r = 1; r <= k; ++r) out.push_back(SupportType::b(r, delta));
  }
  for (Delta delta : {Delta::SameRow, Delta::DiffRow}) {
    for (int r = 1; r <= k; ++r) out.push_back(SupportType::c(delta, r));
  }
  for (Delta delta : {Delta::SameRow, Delta::DiffRow}) {
    for (int r = 1; r < k; ++r) {
      for (int s = 1; r + s <= k; ++s) out.push_back(SupportType::d(r, delta, s));
    }
  }
  return out;
}

}  // namespace cascade
