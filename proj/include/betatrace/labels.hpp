#pragma once

#include <string>
#include <string_view>

namespace betatrace {

// Fixed three-class scheme with ordinal encoding 0/1/2.
enum class ClassLabel : int {
    kReal = 0,
    kGan = 1,
    kDm = 2,
};

inline constexpr int kNumClasses = 3;

std::string_view to_string(ClassLabel label);
ClassLabel parse_label(std::string_view text);

inline int ordinal(ClassLabel label) { return static_cast<int>(label); }
ClassLabel label_from_ordinal(int value);

}  // namespace betatrace
