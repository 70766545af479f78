#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tdpoly/leonard.hpp"
#include "tdpoly/params.hpp"

namespace tdpoly {

/// A parsed parameter-array record: the validated array plus the optional
/// type-data block carried by the file (verified against the sequences).
struct ParsedArray {
    ParameterArray pa;
    std::optional<TypeData> td;
};

/// Parses the one-record array format: "key: value" lines with '#'
/// comments. Required keys: field, d, type, theta, theta_star, and exactly
/// one of zeta (length d+1) / phi (length d, converted by running
/// products). beta is required for d <= 2 and otherwise optional (it is
/// recomputed and cross-checked). Optional type-data block: q (type I) and
/// a, b, c, a*, b*, c*.
ParsedArray parse_array_text(const std::string& text);

std::string render_array_text(const ParameterArray& pa, const std::optional<TypeData>& td);

/// Leonard scalar file: field, d, optional type tag, and the type-data
/// block (q plus a..c*).
struct LeonardFile {
    Field field;
    int d;
    std::optional<TDType> type;
    std::optional<FieldElement> q;
    FieldElement a, b, c, a_star, b_star, c_star;

    TypeData type_data(TDType t) const { return TypeData{t, q, a, b, c, a_star, b_star, c_star}; }
};

LeonardFile parse_leonard_text(const std::string& text);

/// Matrix file: field, d, both spectra, and the two matrices row-major
/// (rows separated by ';', entries by ',').
struct MatrixFile {
    Field field;
    int d;
    std::vector<FieldElement> theta, theta_star;
    Matrix A, A_star;
};

MatrixFile parse_matrix_text(const std::string& text);

std::string render_matrix_text(const MatrixPair& mp, std::span<const FieldElement> theta,
                               std::span<const FieldElement> theta_star);

/// Comma-separated element list in the field's element grammar.
std::vector<FieldElement> parse_element_list(const Field& f, const std::string& text);

std::string render_element_list(std::span<const FieldElement> values);

}  // namespace tdpoly
