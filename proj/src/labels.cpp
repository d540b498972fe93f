#include "betatrace/labels.hpp"

#include "betatrace/errors.hpp"

namespace betatrace {

std::string_view to_string(ClassLabel label) {
    switch (label) {
        case ClassLabel::kReal: return "real";
        case ClassLabel::kGan: return "gan";
        case ClassLabel::kDm: return "dm";
    }
    throw InvalidArgument("to_string: unknown class label");
}

ClassLabel parse_label(std::string_view text) {
    if (text == "real") return ClassLabel::kReal;
    if (text == "gan") return ClassLabel::kGan;
    if (text == "dm") return ClassLabel::kDm;
    throw IoError("parse_label: unknown label '" + std::string(text) + "' (expected real|gan|dm)");
}

ClassLabel label_from_ordinal(int value) {
    if (value < 0 || value >= kNumClasses) {
        throw InvalidArgument("label_from_ordinal: ordinal out of range");
    }
    return static_cast<ClassLabel>(value);
}

}  // namespace betatrace
