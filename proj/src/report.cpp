#include <su11/report.hpp>

#include <cmath>
#include <string>

namespace su11 {

const char* to_string(EvalPath p) {
    return p == EvalPath::closed_form ? "paper" : "oracle";
}

EvalPath eval_path_from_string(std::string_view s) {
    if (s == "paper") return EvalPath::closed_form;
    if (s == "oracle") return EvalPath::oracle;
    throw DomainError("unknown path '" + std::string(s) + "' (expected paper|oracle)");
}

SqueezingReport make_report(double var_x, double var_y, double mean_kz, EvalPath path) {
    const double h = 0.5 * std::abs(mean_kz);
    if (h == 0.0) throw DomainError("squeezing floor undefined: mean_kz == 0");
    SqueezingReport r;
    r.var_x = var_x;
    r.var_y = var_y;
    r.mean_kz = mean_kz;
    r.f_x = (var_x - h) / h;
    r.f_y = (var_y - h) / h;
    r.path = path;
    return r;
}

}  // namespace su11
