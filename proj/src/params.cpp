#include "srcid/params.hpp"

namespace srcid {

std::string to_string(Regime r) {
    switch (r) {
        case Regime::Elliptic: return "elliptic";
        case Regime::Trig: return "trig";
        case Regime::TrigLambda: return "trig_lambda";
        case Regime::Rational: return "rational";
    }
    return "?";
}

std::string to_string(Side s) {
    switch (s) {
        case Side::F: return "F";
        case Side::G: return "G";
        case Side::P: return "P";
        case Side::Q: return "Q";
    }
    return "?";
}

}  // namespace srcid
