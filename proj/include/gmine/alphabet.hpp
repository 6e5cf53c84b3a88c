#pragma once

#include <array>
#include <string>

namespace gmine {

// Character domain for generated inputs: printable ASCII plus tab and
// newline, ordered by code point. The tilde doubles as the generator's
// placeholder sentinel.
class Alphabet {
 public:
  static constexpr char kPlaceholder = '~';

  static const Alphabet& standard() {
    static const Alphabet a = make_standard();
    return a;
  }

  bool contains(char c) const { return member_[static_cast<unsigned char>(c)]; }

  // Ascending code-point order.
  const std::string& chars() const { return chars_; }

  std::size_t size() const { return chars_.size(); }

 private:
  static Alphabet make_standard() {
    Alphabet a;
    a.chars_.push_back('\t');
    a.chars_.push_back('\n');
    for (int c = 0x20; c <= 0x7e; ++c) a.chars_.push_back(static_cast<char>(c));
    for (char c : a.chars_) a.member_[static_cast<unsigned char>(c)] = true;
    return a;
  }

  std::string chars_;
  std::array<bool, 256> member_{};
};

}  // namespace gmine
