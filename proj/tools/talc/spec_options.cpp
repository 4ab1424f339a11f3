#include "spec_options.hpp"

#include <sstream>
#include <vector>

namespace talc::cli {

namespace {

std::vector<Rat> parse_rationals(const std::string& csv) {
    std::vector<Rat> out;
    std::istringstream is(csv);
    std::string tok;
    while (std::getline(is, tok, ',')) out.emplace_back(tok);
    return out;
}

Weight kpoly_weight(const std::string& csv) {
    const auto coeffs = parse_rationals(csv);
    std::ostringstream desc;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (i) desc << " + ";
        desc << to_string(coeffs[i]);
        if (i >= 1) desc << "*k" << (i > 1 ? "^" + std::to_string(i) : "");
    }
    return Weight::tabulated(
        [coeffs](long, long k) {
            Rat acc = 0;
            for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * k + *it;
            return acc;
        },
        desc.str());
}

}  // namespace

void SpecOptions::attach(CLI::App& cmd) {
    cmd.add_option("--catalog", catalog, "catalog entry name (see `talc list`)");
    cmd.add_option("--l", l, "power on the weights for the (l,r) families")->capture_default_str();
    cmd.add_option("--r", r, "leader constraint for the (l,r) families")->capture_default_str();
    cmd.add_option("--m", m, "parameter of m-lah")->capture_default_str();
    cmd.add_option("--nu", nu, "parameter of nu-eulerian")->capture_default_str();
    cmd.add_option("--j", j, "parameter of j-eulerian")->capture_default_str();

    cmd.add_option("--alpha", alpha, "inline c weight: (alpha n + beta k + gamma)^l");
    cmd.add_option("--beta", beta, "");
    cmd.add_option("--gamma", gamma, "");
    cmd.add_option("--alpha-prime", alpha_prime, "inline d weight: (alpha' n + beta' k + gamma')^l");
    cmd.add_option("--beta-prime", beta_prime, "");
    cmd.add_option("--gamma-prime", gamma_prime, "");
    cmd.add_option("--inline-l", inline_l, "exponent for the inline weights")->capture_default_str();
    cmd.add_option("--anchor-n", anchor_n, "anchor row for inline specs")->capture_default_str();
    cmd.add_option("--anchor-k", anchor_k, "anchor column for inline specs")->capture_default_str();
    cmd.add_option("--c-kpoly", c_kpoly,
                   "inline tabulated c: comma-separated coefficients of a polynomial in k");
    cmd.add_option("--d-kpoly", d_kpoly, "inline tabulated d, same format");
}

RecurrenceSpec SpecOptions::resolve() const {
    const bool inline_given = inline_affine_given() || inline_kpoly_given();
    if (catalog.empty() == !inline_given)
        throw CLI::ValidationError("spec", "give exactly one of --catalog or an inline weight set");
    if (!catalog.empty())
        return catalog_lookup(catalog, {.l = l, .r = r, .m = m, .nu = nu, .j = j});

    RecurrenceSpec spec;
    spec.name = "inline";
    spec.anchor_n = anchor_n;
    spec.anchor_k = anchor_k;
    if (inline_affine_given()) {
        if (beta.empty() || gamma.empty() || alpha_prime.empty() || beta_prime.empty() ||
            gamma_prime.empty())
            throw CLI::ValidationError(
                "spec", "inline affine form needs all six of --alpha..--gamma-prime");
        spec.weights.c = Weight::affine_power(Rat(alpha), Rat(beta), Rat(gamma), inline_l);
        spec.weights.d =
            Weight::affine_power(Rat(alpha_prime), Rat(beta_prime), Rat(gamma_prime), inline_l);
    } else {
        spec.weights.c = c_kpoly.empty() ? Weight::affine_power(0, 0, 1, 1) : kpoly_weight(c_kpoly);
        spec.weights.d = d_kpoly.empty() ? Weight::affine_power(0, 0, 1, 1) : kpoly_weight(d_kpoly);
    }
    spec.weights.description =
        "c=" + spec.weights.c.description() + ", d=" + spec.weights.d.description();
    return spec;
}

std::string SpecOptions::describe() const {
    if (!catalog.empty()) {
        std::ostringstream os;
        os << catalog << "(l=" << l << ",r=" << r << ",m=" << m << ",nu=" << nu << ",j=" << j
           << ")";
        return os.str();
    }
    return "inline";
}

}  // namespace talc::cli
