#include "rps/errors.hpp"

namespace rps {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::config: return "config";
        case ErrorKind::coefficient: return "coefficient";
        case ErrorKind::structural: return "structural";
        case ErrorKind::index: return "index";
        case ErrorKind::degenerate_support: return "degenerate-support";
        case ErrorKind::solver: return "solver";
        case ErrorKind::conditioning: return "conditioning";
        case ErrorKind::measurement: return "measurement";
        case ErrorKind::fit: return "fit";
        case ErrorKind::io: return "io";
    }
    return "unknown";
}

}  // namespace rps
