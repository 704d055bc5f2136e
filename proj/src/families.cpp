#include "families.hpp"

namespace ribbonkit {

namespace {

struct PartsBuilder {
    std::vector<Int> v;
    PartsBuilder& part(Int x) {
        v.push_back(x);
        return *this;
    }
    PartsBuilder& ones(Int count) {
        v.insert(v.end(), static_cast<std::size_t>(count), 1);
        return *this;
    }
    Composition take() { return Composition(std::move(v)); }
};

Partition nu_two_rows(Int a, Int b, Int twos, Int ones) {
    std::vector<Int> parts{a};
    if (b > 0) parts.push_back(b);
    parts.insert(parts.end(), static_cast<std::size_t>(twos), 2);
    parts.insert(parts.end(), static_cast<std::size_t>(ones), 1);
    return Partition(std::move(parts));
}

void require(bool ok, const char* what) {
    if (!ok) throw DomainError(what);
}

}  // namespace

const char* family_pattern(int id) {
    switch (id) {
        case 1: return "alpha=b1^d.a beta=(b-1)1^d.(a+1) nu=ab1^d";
        case 2: return "alpha=ab1^d beta=(b-1)(a+1)1^d nu=ab1^d";
        case 3: return "alpha=1^(d+1).a(b-1) beta=1^(d+1).(b-1)a nu=ab1^d";
        case 4: return "alpha=1a1^d.(b-1) beta=1(b-1)1^d.a nu=ab1^d";
        case 5: return "alpha=(b-1)1^d.b(a-b+1) beta=b1^d.(b-1)(a-b+1) nu=ab1^d";
        case 6: return "alpha=1^(c+d).a1^c beta=1^(c+d+1).a1^(c-1) nu=a2^c1^d";
        case 7: return "alpha=(a-1)1^(c-1).2.1^(c+d) beta=(a-1)1^(c+d).2.1^(c-1) nu=a2^c1^d";
        case 8: return "alpha=1^(c-1).2.1^(c+d-1).a beta=1^(c+d).2.1^(c-2).a nu=a2^c1^d";
        case 9: return "alpha=1^(c-1).a1^(c+d-1).2 beta=1^(c+d).a1^(c-2).2 nu=a2^c1^d";
        case 10: return "alpha=1^d.2.1^(c-1).a1^(c-1) beta=1^d.2.1^(c-2).a1^c nu=a2^c1^d";
        case 11: return "alpha=1^(c+d+1).a(b-1)1^c beta=1^(c+d+1).(b-1)a1^c nu=ab2^c1^d";
        case 12: return "alpha=(b-1)1^(c-1).2.1^(c+d).a beta=(b-1)1^(c+d).2.1^(c-1).a nu=ab2^c1^d";
        case 13: return "alpha=1^c.a(b-1)1^(c-1).2.1^d beta=1^c.(b-1)a1^(c-1).2.1^d nu=ab2^c1^d";
        case 14:
            return "alpha=(a-b+1)(b-1)1^(c-1).2.1^(c+d).(b-1) "
                   "beta=(a-b+1)(b-1)1^(c+d).2.1^(c-1).(b-1) nu=ab2^c1^d";
        case 15: return "alpha=2a121 beta=212a1 nu=a42";
        case 16: return "alpha=231^(d+2).21 beta=21^(d+2).231 nu=33221^d";
        default: throw DomainError("unknown family id");
    }
}

const char* family_param_names(int id) {
    switch (id) {
        case 1:
        case 2:
        case 3:
        case 4:
        case 5: return "abd";
        case 6:
        case 7:
        case 8:
        case 9:
        case 10: return "acd";
        case 11:
        case 12:
        case 13:
        case 14: return "abcd";
        case 15: return "a";
        case 16: return "d";
        default: throw DomainError("unknown family id");
    }
}

FamilyInstance instantiate_family(int id, const FamilyParams& p) {
    const Int a = p.a, b = p.b, c = p.c, d = p.d;
    switch (id) {
        case 1:
            require(b >= 2 && a >= b && d >= 0, "family 1 requires a >= b >= 2, d >= 0");
            return {PartsBuilder().part(b).ones(d).part(a).take(),
                    PartsBuilder().part(b - 1).ones(d).part(a + 1).take(),
                    nu_two_rows(a, b, 0, d)};
        case 2:
            require(b >= 2 && a >= b && d >= 0, "family 2 requires a >= b >= 2, d >= 0");
            return {PartsBuilder().part(a).part(b).ones(d).take(),
                    PartsBuilder().part(b - 1).part(a + 1).ones(d).take(),
                    nu_two_rows(a, b, 0, d)};
        case 3:
            require(b >= 2 && a >= b && d >= 0, "family 3 requires a >= b >= 2, d >= 0");
            return {PartsBuilder().ones(d + 1).part(a).part(b - 1).take(),
                    PartsBuilder().ones(d + 1).part(b - 1).part(a).take(),
                    nu_two_rows(a, b, 0, d)};
        case 4:
            require(b >= 2 && a >= b && d >= 0, "family 4 requires a >= b >= 2, d >= 0");
            return {PartsBuilder().part(1).part(a).ones(d).part(b - 1).take(),
                    PartsBuilder().part(1).part(b - 1).ones(d).part(a).take(),
                    nu_two_rows(a, b, 0, d)};
        case 5:
            require(b >= 2 && a >= b && d >= 0, "family 5 requires a >= b >= 2, d >= 0");
            return {PartsBuilder().part(b - 1).ones(d).part(b).part(a - b + 1).take(),
                    PartsBuilder().part(b).ones(d).part(b - 1).part(a - b + 1).take(),
                    nu_two_rows(a, b, 0, d)};
        case 6:
            require(a >= 2 && c >= 1 && d >= 0, "family 6 requires a >= 2, c >= 1, d >= 0");
            return {PartsBuilder().ones(c + d).part(a).ones(c).take(),
                    PartsBuilder().ones(c + d + 1).part(a).ones(c - 1).take(),
                    nu_two_rows(a, 0, c, d)};
        case 7:
            require(a >= 2 && c >= 1 && d >= 0, "family 7 requires a >= 2, c >= 1, d >= 0");
            return {PartsBuilder().part(a - 1).ones(c - 1).part(2).ones(c + d).take(),
                    PartsBuilder().part(a - 1).ones(c + d).part(2).ones(c - 1).take(),
                    nu_two_rows(a, 0, c, d)};
        case 8:
            require(a >= 2 && c >= 2 && d >= 0, "family 8 requires a >= 2, c >= 2, d >= 0");
            return {PartsBuilder().ones(c - 1).part(2).ones(c + d - 1).part(a).take(),
                    PartsBuilder().ones(c + d).part(2).ones(c - 2).part(a).take(),
                    nu_two_rows(a, 0, c, d)};
        case 9:
            require(a >= 2 && c >= 2 && d >= 0, "family 9 requires a >= 2, c >= 2, d >= 0");
            return {PartsBuilder().ones(c - 1).part(a).ones(c + d - 1).part(2).take(),
                    PartsBuilder().ones(c + d).part(a).ones(c - 2).part(2).take(),
                    nu_two_rows(a, 0, c, d)};
        case 10:
            require(a >= 2 && c >= 2 && d >= 0, "family 10 requires a >= 2, c >= 2, d >= 0");
            return {PartsBuilder().ones(d).part(2).ones(c - 1).part(a).ones(c - 1).take(),
                    PartsBuilder().ones(d).part(2).ones(c - 2).part(a).ones(c).take(),
                    nu_two_rows(a, 0, c, d)};
        case 11:
            require(b >= 2 && a >= b && c >= 1 && d >= 0,
                    "family 11 requires a >= b >= 2, c >= 1, d >= 0");
            return {PartsBuilder().ones(c + d + 1).part(a).part(b - 1).ones(c).take(),
                    PartsBuilder().ones(c + d + 1).part(b - 1).part(a).ones(c).take(),
                    nu_two_rows(a, b, c, d)};
        case 12:
            require(b >= 2 && a >= b && c >= 1 && d >= 0,
                    "family 12 requires a >= b >= 2, c >= 1, d >= 0");
            return {PartsBuilder().part(b - 1).ones(c - 1).part(2).ones(c + d).part(a).take(),
                    PartsBuilder().part(b - 1).ones(c + d).part(2).ones(c - 1).part(a).take(),
                    nu_two_rows(a, b, c, d)};
        case 13:
            require(b >= 2 && a >= b && c >= 1 && d >= 0,
                    "family 13 requires a >= b >= 2, c >= 1, d >= 0");
            return {PartsBuilder().ones(c).part(a).part(b - 1).ones(c - 1).part(2).ones(d).take(),
                    PartsBuilder().ones(c).part(b - 1).part(a).ones(c - 1).part(2).ones(d).take(),
                    nu_two_rows(a, b, c, d)};
        case 14:
            require(b >= 2 && a >= b && c >= 1 && d >= 0,
                    "family 14 requires a >= b >= 2, c >= 1, d >= 0");
            return {PartsBuilder()
                        .part(a - b + 1)
                        .part(b - 1)
                        .ones(c - 1)
                        .part(2)
                        .ones(c + d)
                        .part(b - 1)
                        .take(),
                    PartsBuilder()
                        .part(a - b + 1)
                        .part(b - 1)
                        .ones(c + d)
                        .part(2)
                        .ones(c - 1)
                        .part(b - 1)
                        .take(),
                    nu_two_rows(a, b, c, d)};
        case 15:
            require(a >= 4, "family 15 requires a >= 4");
            return {PartsBuilder().part(2).part(a).part(1).part(2).part(1).take(),
                    PartsBuilder().part(2).part(1).part(2).part(a).part(1).take(),
                    Partition({a, 4, 2})};
        case 16:
            require(d >= 0, "family 16 requires d >= 0");
            return {PartsBuilder().part(2).part(3).ones(d + 2).part(2).part(1).take(),
                    PartsBuilder().part(2).ones(d + 2).part(2).part(3).part(1).take(),
                    nu_two_rows(3, 3, 2, d)};
        default: throw DomainError("unknown family id");
    }
}

namespace {

std::optional<FamilyParams> params_from_nu(int id, const Partition& nu) {
    const auto& v = nu.parts();
    int len = nu.length();
    auto count_tail = [&](int from, Int value) {
        Int count = 0;
        for (int i = from; i < len; ++i) {
            if (v[static_cast<std::size_t>(i)] == value) ++count;
        }
        return count;
    };
    if (id >= 1 && id <= 5) {
        if (len < 2 || v[1] < 2) return std::nullopt;
        if (count_tail(2, 1) != len - 2) return std::nullopt;
        return FamilyParams{v[0], v[1], 0, len - 2};
    }
    if (id >= 6 && id <= 10) {
        if (len < 2 || v[0] < 2) return std::nullopt;
        Int twos = count_tail(1, 2), ones = count_tail(1, 1);
        if (twos + ones != len - 1 || twos < 1) return std::nullopt;
        return FamilyParams{v[0], 0, twos, ones};
    }
    if (id >= 11 && id <= 14) {
        if (len < 3 || v[1] < 2) return std::nullopt;
        Int twos = count_tail(2, 2), ones = count_tail(2, 1);
        if (twos + ones != len - 2 || twos < 1) return std::nullopt;
        return FamilyParams{v[0], v[1], twos, ones};
    }
    if (id == 15) {
        if (len != 3 || v[0] < 4 || v[1] != 4 || v[2] != 2) return std::nullopt;
        return FamilyParams{v[0], 0, 0, 0};
    }
    if (id == 16) {
        if (len < 4 || v[0] != 3 || v[1] != 3 || v[2] != 2 || v[3] != 2) return std::nullopt;
        if (count_tail(4, 1) != len - 4) return std::nullopt;
        return FamilyParams{0, 0, 0, len - 4};
    }
    return std::nullopt;
}

}  // namespace

void for_each_family_instance(
    int id, Int size_cap,
    const std::function<void(const FamilyParams&, const FamilyInstance&)>& fn) {
    auto visit = [&](const FamilyParams& params) {
        FamilyInstance inst = instantiate_family(id, params);
        fn(params, inst);
    };
    if (id >= 1 && id <= 5) {
        for (Int b = 2; 2 * b <= size_cap; ++b)
            for (Int a = b; a + b <= size_cap; ++a)
                for (Int d = 0; a + b + d <= size_cap; ++d) visit({a, b, 0, d});
    } else if (id >= 6 && id <= 10) {
        Int c_min = (id == 6 || id == 7) ? 1 : 2;
        for (Int c = c_min; 2 + 2 * c <= size_cap; ++c)
            for (Int a = 2; a + 2 * c <= size_cap; ++a)
                for (Int d = 0; a + 2 * c + d <= size_cap; ++d) visit({a, 0, c, d});
    } else if (id >= 11 && id <= 14) {
        for (Int c = 1; 4 + 2 * c <= size_cap; ++c)
            for (Int b = 2; 2 * b + 2 * c <= size_cap; ++b)
                for (Int a = b; a + b + 2 * c <= size_cap; ++a)
                    for (Int d = 0; a + b + 2 * c + d <= size_cap; ++d) visit({a, b, c, d});
    } else if (id == 15) {
        for (Int a = 4; a + 6 <= size_cap; ++a) visit({a, 0, 0, 0});
    } else if (id == 16) {
        for (Int d = 0; d + 10 <= size_cap; ++d) visit({0, 0, 0, d});
    } else {
        throw DomainError("unknown family id");
    }
}

std::vector<FamilyMatch> classify_triple(const Composition& alpha, const Composition& beta,
                                         const Partition& nu, std::uint32_t disabled_mask) {
    std::vector<FamilyMatch> matches;
    Composition alpha_rev = reverse(alpha);
    Composition beta_rev = reverse(beta);
    for (int id = 1; id <= kFamilyCount; ++id) {
        if (disabled_mask & (std::uint32_t{1} << (id - 1))) continue;
        auto params = params_from_nu(id, nu);
        if (!params) continue;
        std::optional<FamilyInstance> inst;
        try {
            inst = instantiate_family(id, *params);
        } catch (const DomainError&) {
            continue;
        }
        if (inst->nu == nu && (inst->alpha == alpha || inst->alpha == alpha_rev) &&
            (inst->beta == beta || inst->beta == beta_rev)) {
            matches.push_back({id, *params});
        }
    }
    return matches;
}

}  // namespace ribbonkit
