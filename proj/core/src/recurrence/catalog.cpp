#include "talc/recurrence/catalog.hpp"

#include <sstream>

#include "talc/errors.hpp"

namespace talc {

namespace {

RecurrenceSpec affine_spec(std::string name, long n0, long k0,
                           Rat a, Rat b, Rat g, Rat ap, Rat bp, Rat gp, unsigned l = 1) {
    RecurrenceSpec s;
    s.name = std::move(name);
    s.anchor_n = n0;
    s.anchor_k = k0;
    s.weights.c = Weight::affine_power(std::move(a), std::move(b), std::move(g), l);
    s.weights.d = Weight::affine_power(std::move(ap), std::move(bp), std::move(gp), l);
    s.weights.description = "c=" + s.weights.c.description() + ", d=" + s.weights.d.description();
    return s;
}

std::string with_params(const std::string& base, std::initializer_list<std::pair<const char*, long>> ps) {
    std::ostringstream os;
    os << base << "(";
    bool first = true;
    for (const auto& [k, v] : ps) {
        if (!first) os << ",";
        os << k << "=" << v;
        first = false;
    }
    os << ")";
    return os.str();
}

}  // namespace

RecurrenceSpec catalog_lookup(const std::string& name, const CatalogParams& p) {
    const unsigned l = p.l, r = p.r;
    if (name == "binomial") return affine_spec("binomial", 0, 0, 0, 0, 1, 0, 0, 1);
    if (name == "stirling-subset") return affine_spec("stirling-subset", 0, 0, 0, 1, 0, 0, 0, 1);
    if (name == "stirling-cycle") return affine_spec("stirling-cycle", 0, 0, 1, 0, -1, 0, 0, 1);
    if (name == "lah") return affine_spec("lah", 0, 0, 1, 1, -1, 0, 0, 1);
    if (name == "m-lah")
        return affine_spec(with_params("m-lah", {{"m", p.m}}), 0, 0, 1, p.m, -1, 0, 0, p.m);
    if (name == "stirling-lah") return affine_spec("stirling-lah", 0, 0, 2, 1, -2, 0, 0, 1);
    if (name == "broder")
        return affine_spec(with_params("broder", {{"r", static_cast<long>(r)}}), 0, 0,
                           static_cast<long>(r) - 1, 1, 1 - static_cast<long>(r), 0, 0, 1);
    if (name == "eulerian") return affine_spec("eulerian", 1, 0, 0, 1, 1, 1, -1, 0);
    if (name == "nu-eulerian")
        return affine_spec(with_params("nu-eulerian", {{"nu", p.nu}}), 1, 0,
                           0, 1, 1, p.nu, -1, 1 - p.nu);
    if (name == "j-eulerian")
        return affine_spec(with_params("j-eulerian", {{"j", p.j}}), 1, 0,
                           0, p.j, 1, p.j, -p.j, 0);
    if (name == "narayana-a")
        return affine_spec("narayana-a", 0, 0, 1, 2, -1, 3, -2, 1);
    if (name == "narayana-b")
        return affine_spec("narayana-b", 0, 0, 1, 2, 0, 3, -2, 0);
    if (name == "holiday-first")
        return affine_spec("holiday-first", 0, 0, 2, 1, -1, 0, 0, 1);
    if (name == "holiday-second")
        return affine_spec("holiday-second", 0, 0, 2, 1, 0, 0, 0, 1);
    if (name == "legendre-stirling") {
        RecurrenceSpec s;
        s.name = "legendre-stirling";
        s.anchor_n = 0;
        s.anchor_k = 0;
        s.weights.c = Weight::tabulated([](long, long k) { return Rat(k * k + k); }, "k^2+k");
        s.weights.d = Weight::affine_power(0, 0, 1, 1);
        s.weights.description = "c=k^2+k, d=1";
        return s;
    }
    // Two-parameter families in true indices; anchors calibrated against the
    // tuple-census brute force (see data/oeis/README.md and the tests).
    if (name == "lr-stirling2")
        return affine_spec(with_params("lr-stirling2", {{"l", l}, {"r", r}}),
                           r, r, 0, 1, 0, 0, 0, 1, l);
    if (name == "lr-stirling1")
        return affine_spec(with_params("lr-stirling1", {{"l", l}, {"r", r}}),
                           r, r, 1, 0, -1, 0, 0, 1, l);
    if (name == "lr-lah")
        return affine_spec(with_params("lr-lah", {{"l", l}, {"r", r}}),
                           r, r, 1, 1, -1, 0, 0, 1, l);
    if (name == "lr-eulerian")
        return affine_spec(with_params("lr-eulerian", {{"l", l}, {"r", r}}),
                           r, static_cast<long>(r) - 1, 0, 1, 1, 1, -1, 0, l);
    std::ostringstream os;
    os << name << " (known:";
    for (const auto& k : catalog_names()) os << " " << k;
    os << ")";
    throw unknown_name_error(os.str());
}

std::vector<std::string> catalog_names() {
    return {"binomial",       "stirling-subset", "stirling-cycle", "lah",
            "m-lah",          "stirling-lah",    "broder",         "eulerian",
            "nu-eulerian",    "j-eulerian",      "narayana-a",     "narayana-b",
            "holiday-first",  "holiday-second",  "legendre-stirling",
            "lr-stirling2",   "lr-stirling1",    "lr-lah",         "lr-eulerian"};
}

std::vector<RecurrenceSpec> catalog_sweep_specs(unsigned l_max, unsigned r_max) {
    std::vector<RecurrenceSpec> specs;
    for (const char* k : {"binomial", "stirling-subset", "stirling-cycle", "lah",
                          "stirling-lah", "eulerian", "narayana-a", "narayana-b",
                          "holiday-first", "holiday-second", "legendre-stirling"})
        specs.push_back(catalog_lookup(k));
    for (long m : {2L, 3L}) specs.push_back(catalog_lookup("m-lah", {.m = m}));
    for (unsigned r : {2u, 3u}) specs.push_back(catalog_lookup("broder", {.r = r}));
    for (long nu : {2L, 3L}) specs.push_back(catalog_lookup("nu-eulerian", {.nu = nu}));
    for (long j : {2L, 3L}) specs.push_back(catalog_lookup("j-eulerian", {.j = j}));
    for (const char* k : {"lr-stirling2", "lr-stirling1", "lr-lah", "lr-eulerian"})
        for (unsigned l = 1; l <= l_max; ++l)
            for (unsigned r = 1; r <= r_max; ++r)
                specs.push_back(catalog_lookup(k, {.l = l, .r = r}));
    return specs;
}

std::optional<AffineParams> affine_params(const RecurrenceSpec& spec) {
    const AffineForm* c = spec.weights.c.affine();
    const AffineForm* d = spec.weights.d.affine();
    if (!c || !d) return std::nullopt;
    return AffineParams{*c, *d};
}

}  // namespace talc
