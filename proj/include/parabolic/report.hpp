#pragma once

#include "parabolic/repmat.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <string>

namespace parabolic {

/// Summary of a nonzero residual: lowest parameter degree, its leading term
/// and the number of nonzero terms (or matrix entries).
struct Residual {
    int order = 0;
    std::string leading;
    std::size_t terms = 0;
};

/// Outcome of one verification.
struct Report {
    std::string name;
    bool pass = false;
    std::optional<int> degree; ///< std::nullopt for exact checks
    std::optional<Residual> residual;
    long long millis = 0;
    nlohmann::json details = nlohmann::json::object();
};

template <std::size_t Legs>
std::optional<Residual> summarize(const Element<Legs>& r)
{
    if (r.is_zero())
        return std::nullopt;
    return Residual{r.valuation(), leading_residual(r), r.size()};
}

template <std::size_t Legs>
std::optional<Residual> summarize(const CheckResult<Legs>& c)
{
    return summarize(c.residual);
}

std::optional<Residual> summarize(const PolyMatrix& r);
std::optional<Residual> summarize(const MatrixCheck& c);

/// {name, status, degree, residual, millis} plus details when present.
nlohmann::json to_json(const Report& r);

/// One line: status, name, degree and the residual summary.
std::string to_text(const Report& r);

} // namespace parabolic
