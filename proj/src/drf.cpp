#include "fitsim/drf.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>

namespace fitsim {

namespace {

const double kConvexNormalizer = std::exp(1.0) + std::exp(-1.0);

double parse_param(std::string_view spec, std::string_view token) {
    double value = 0.0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last)
        throw std::invalid_argument("invalid drf spec \"" + std::string(spec) +
                                    "\": bad parameter \"" + std::string(token) + "\"");
    return value;
}

std::string format_param(double v) {
    char buf[32];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

} // namespace

DisparityResponse DisparityResponse::negative_step(double threshold) {
    if (!(threshold > 0.0)) throw std::invalid_argument("negative step threshold must be > 0");
    return {DrfKind::NegativeStep, threshold};
}

DisparityResponse DisparityResponse::positive_step(double threshold) {
    if (!(threshold > 0.0)) throw std::invalid_argument("positive step threshold must be > 0");
    return {DrfKind::PositiveStep, threshold};
}

DisparityResponse DisparityResponse::linear(double intercept) {
    // Intercept must exceed 1 or the line never passes through (1, 1) with
    // negative slope and a zero crossing at K / (K - 1).
    if (!(intercept > 1.0)) throw std::invalid_argument("linear intercept must be > 1");
    return {DrfKind::Linear, intercept};
}

DisparityResponse DisparityResponse::inverse() { return {DrfKind::Inverse, 0.0}; }

DisparityResponse DisparityResponse::convex_exp_sum(double cap) {
    if (!(cap > 0.0)) throw std::invalid_argument("convex cap must be > 0");
    return {DrfKind::ConvexExpSum, cap};
}

double DisparityResponse::operator()(double x) const {
    if (!(x >= 0.0)) throw std::invalid_argument("disparity must be >= 0");
    switch (kind_) {
    case DrfKind::NegativeStep:
        return x <= param_ ? 1.0 : 0.0;
    case DrfKind::PositiveStep:
        return x > param_ ? 1.0 : 0.0;
    case DrfKind::Linear:
        return std::max(0.0, param_ - (param_ - 1.0) * x);
    case DrfKind::Inverse:
        if (x == 0.0) throw std::domain_error("inverse response undefined at disparity 0");
        return 1.0 / x;
    case DrfKind::ConvexExpSum:
        return std::min((std::exp(1.0 - 1.5 * x) + std::exp(0.35 * x - 1.0)) / kConvexNormalizer,
                        param_);
    }
    throw std::logic_error("unreachable drf kind");
}

std::string DisparityResponse::spec_string() const {
    switch (kind_) {
    case DrfKind::NegativeStep: return "neg-step:" + format_param(param_);
    case DrfKind::PositiveStep: return "pos-step:" + format_param(param_);
    case DrfKind::Linear: return "linear:" + format_param(param_);
    case DrfKind::Inverse: return "inverse";
    case DrfKind::ConvexExpSum: return "convex:" + format_param(param_);
    }
    return "?";
}

DisparityResponse DisparityResponse::parse(std::string_view spec) {
    std::string_view family = spec;
    std::string_view param;
    bool has_param = false;
    if (const auto colon = spec.find(':'); colon != std::string_view::npos) {
        family = spec.substr(0, colon);
        param = spec.substr(colon + 1);
        has_param = true;
    }

    if (family == "inverse") {
        if (has_param)
            throw std::invalid_argument("invalid drf spec \"" + std::string(spec) +
                                        "\": \"inverse\" takes no parameter");
        return inverse();
    }

    if (!has_param || param.empty())
        throw std::invalid_argument("invalid drf spec \"" + std::string(spec) +
                                    "\": missing parameter for \"" + std::string(family) + "\"");

    const double value = parse_param(spec, param);
    if (family == "neg-step") return negative_step(value);
    if (family == "pos-step") return positive_step(value);
    if (family == "linear") return linear(value);
    if (family == "convex") return convex_exp_sum(value);
    throw std::invalid_argument("invalid drf spec \"" + std::string(spec) +
                                "\": unknown family \"" + std::string(family) + "\"");
}

std::vector<DisparityResponse> standard_instances() {
    std::vector<DisparityResponse> out;
    out.reserve(27);
    // 21 thresholds evenly spaced from 0.5 to 2.6, generated rather than
    // hard-coded. The rational form keeps each threshold on the decimal grid
    // (0.605, 0.71, ...) so spec strings round-trip without float noise.
    for (int i = 0; i < 21; ++i)
        out.push_back(DisparityResponse::negative_step((500.0 + 105.0 * i) / 1000.0));
    for (double intercept : {1.05, 1.55, 2.05})
        out.push_back(DisparityResponse::linear(intercept));
    out.push_back(DisparityResponse::inverse());
    out.push_back(DisparityResponse::convex_exp_sum(10.0));
    out.push_back(DisparityResponse::positive_step(1.0));
    return out;
}

} // namespace fitsim
