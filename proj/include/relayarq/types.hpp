#pragma once

#include <string>

namespace relayarq {

enum class Mode { Single, AF, DF };

inline std::string to_string(Mode mode) {
    switch (mode) {
        case Mode::Single: return "single";
        case Mode::AF: return "af";
        case Mode::DF: return "df";
    }
    return "?";
}

} // namespace relayarq
