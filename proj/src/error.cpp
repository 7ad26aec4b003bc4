#include "torus/error.hpp"

namespace torus {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Parse: return "Parse";
        case ErrorKind::RankDeficient: return "RankDeficient";
        case ErrorKind::OutOfRange: return "OutOfRange";
        case ErrorKind::NotAdmissible: return "NotAdmissible";
        case ErrorKind::Unclassifiable: return "Unclassifiable";
        case ErrorKind::OutsideOpenHypersimplex: return "OutsideOpenHypersimplex";
        case ErrorKind::Unsupported: return "Unsupported";
        case ErrorKind::NotMainStratum: return "NotMainStratum";
        case ErrorKind::DegenerateTriple: return "DegenerateTriple";
        case ErrorKind::CenterWithoutDirection: return "CenterWithoutDirection";
        case ErrorKind::BoundaryNotSquareZero: return "BoundaryNotSquareZero";
        case ErrorKind::InexactSequence: return "InexactSequence";
        case ErrorKind::AmbiguousExtension: return "AmbiguousExtension";
        case ErrorKind::Usage: return "UsageError";
    }
    return "Unknown";
}

}  // namespace torus
