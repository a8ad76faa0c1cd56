#pragma once

#include <optional>
#include <string>
#include <vector>

#include "srcid/field.hpp"
#include "srcid/matrix.hpp"

namespace srcid {

enum class Regime { Elliptic, Trig, TrigLambda, Rational };
enum class Side { F, G, P, Q };

std::string to_string(Regime r);
std::string to_string(Side s);

template <Scalar T>
struct EllipticParams {
    T p;
    T q;
    T lambda;
    T z;
    std::vector<T> u;
    std::vector<T> v;
};

template <Scalar T>
struct TrigParams {
    T q;
    T z;
    std::vector<T> u;
    std::vector<T> v;
    std::optional<T> lambda;
};

template <Scalar T>
struct RationalParams {
    T c;
    T z;
    std::vector<T> u;
    std::vector<T> v;
};

// Spectator data of the determinant representations. eta_v has length m
// (F side), eta_u has length n (G side); p_mix is m x m, q_mix is n x n.
template <Scalar T>
struct AuxParams {
    T r;
    Matrix<T> p_mix;
    Matrix<T> q_mix;
    T delta;
    std::vector<T> eta_v;
    std::vector<T> eta_u;
};

}  // namespace srcid
