#include "parabolic/report.hpp"

#include <algorithm>
#include <climits>

namespace parabolic {

std::optional<Residual> summarize(const PolyMatrix& r)
{
    Residual s;
    s.order = INT_MAX;
    for (Eigen::Index k = 0; k < r.size(); ++k) {
        const ParamPoly& p = r.data()[k];
        if (p.is_zero())
            continue;
        ++s.terms;
        s.order = std::min(s.order, p.valuation());
    }
    if (s.terms == 0)
        return std::nullopt;
    s.leading = leading_entry(r);
    return s;
}

std::optional<Residual> summarize(const MatrixCheck& c)
{
    return summarize(c.residual);
}

nlohmann::json to_json(const Report& r)
{
    nlohmann::json j;
    j["name"] = r.name;
    j["status"] = r.pass ? "pass" : "fail";
    j["degree"] = r.degree ? nlohmann::json(*r.degree) : nlohmann::json(nullptr);
    if (r.residual)
        j["residual"] = {{"order", r.residual->order}, {"leading", r.residual->leading}, {"terms", r.residual->terms}};
    else
        j["residual"] = nullptr;
    j["millis"] = r.millis;
    if (!r.details.empty())
        j["details"] = r.details;
    return j;
}

std::string to_text(const Report& r)
{
    std::string out = r.pass ? "PASS " : "FAIL ";
    out += r.name;
    out += r.degree ? "  degree=" + std::to_string(*r.degree) : "  exact";
    if (r.residual)
        out += "  residual: order " + std::to_string(r.residual->order) + ", " + std::to_string(r.residual->terms)
               + " terms, leading " + r.residual->leading;
    if (r.millis > 0)
        out += "  " + std::to_string(r.millis) + " ms";
    return out;
}

} // namespace parabolic
