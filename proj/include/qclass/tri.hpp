#pragma once

#include <string>

namespace qclass {

/// Three-valued answer for questions that may be undecidable at the available precision.
enum class Tri { Yes, No, Undetermined };

inline std::string to_string(Tri t) {
  switch (t) {
    case Tri::Yes: return "yes";
    case Tri::No: return "no";
    case Tri::Undetermined: return "undetermined";
  }
  return "?";
}

}  // namespace qclass
