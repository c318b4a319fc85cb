#pragma once

#include <string_view>

#include <su11/errors.hpp>

namespace su11 {

// Evaluation backend for squeezing factors.
//   closed_form: the published variance formulas evaluated literally
//                (CLI token "paper").
//   oracle:      first-principles initial moments + exact adjoint transport
//                (CLI token "oracle").
enum class EvalPath { closed_form, oracle };

const char* to_string(EvalPath p);
EvalPath eval_path_from_string(std::string_view s);  // DomainError on unknown token

// Squeezing factors relative to the coherent floor var = |<Kz>|/2:
//   f_j = (var_j - |mean_kz|/2) / (|mean_kz|/2),  j in {x, y}.
// f_j < 0 means the j quadrature is squeezed.  On the oracle path
// f_j >= -1 and (1+f_x)(1+f_y) >= 1; the closed-form path may violate both.
struct SqueezingReport {
    double f_x, f_y;
    double var_x, var_y;
    double mean_kz;
    EvalPath path;
};

// Computes f_x, f_y from the given variances and mean Kz.
// Throws DomainError if mean_kz == 0 (floor undefined).
SqueezingReport make_report(double var_x, double var_y, double mean_kz, EvalPath path);

}  // namespace su11
