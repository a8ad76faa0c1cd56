#pragma once

#include <string>

#include "srcid/params.hpp"
#include "srcid/source.hpp"

namespace srcid {

enum class DetFamily { MPT, ScalarProduct, DWBC, BS, BSLimit, IK };

std::string to_string(DetFamily f);
DetFamily parse_det_family(const std::string& name);

// elliptic: MPT, BS. trig / rational: MPT, ScalarProduct, DWBC, BS, BSLimit.
// IK: rational only.
bool family_available(Regime regime, DetFamily family);

// Families with a modified first row (MPT, BS) need at least one row.
bool family_needs_rows(DetFamily family);

// Determinant representations of F (side F) or G (side G). The aux data is
// ignored by families that do not use it. IK returns P_{n,n} at z = 1.
template <Scalar T>
T det_rep(const EllipticParams<T>& params, DetFamily family, Side side, const AuxParams<T>& aux,
          const Truncation& trunc = {});

template <Scalar T>
T det_rep(const TrigParams<T>& params, DetFamily family, Side side, const AuxParams<T>& aux);

template <Scalar T>
T det_rep(const RationalParams<T>& params, DetFamily family, Side side, const AuxParams<T>& aux);

// Y / Z (n >= m, size n) or U / V (n < m, size m).
template <Scalar T>
Matrix<T> build_dwbc_matrix(const TrigParams<T>& params, Side side);

template <Scalar T>
Matrix<T> build_dwbc_matrix(const RationalParams<T>& params, Side side);

// Gaudin-Izergin-Korepin determinant; equals P_{n,n} at z = 1.
template <Scalar T>
T izergin_korepin(const std::vector<T>& u, const std::vector<T>& v, const T& c);

}  // namespace srcid
