#include <algorithm>
#include <numeric>

#include "qrsid/catalog.hpp"

// Built-in identity catalog. Quadratic exponents are entered through the
// small builder below: sq/cross/lin/cst feed Q(i), ulin/ucst feed the unit
// exponent T(i) of i^T (so (-1)^j enters as ulin 2 on j).

namespace qrsid {

namespace {

class SumB {
public:
    explicit SumB(int k) : k_(k) {
        c_.quad = QuadForm::zero(k);
        c_.unit = QuadForm::zero(k);
    }

    SumB& sq(int a, Rational v) {
        c_.quad.matrix[a][a] += v;
        return *this;
    }
    SumB& cross(int a, int b, Rational v) {
        c_.quad.matrix[a][b] += v / 2;
        c_.quad.matrix[b][a] += v / 2;
        return *this;
    }
    SumB& lin(std::vector<Rational> v) {
        for (int m = 0; m < k_; ++m) c_.quad.linear[m] += v[m];
        return *this;
    }
    SumB& cst(Rational v) {
        c_.quad.constant += v;
        return *this;
    }
    SumB& ulin(std::vector<long> v) {
        for (int m = 0; m < k_; ++m) c_.unit.linear[m] += rat(v[m]);
        return *this;
    }
    SumB& sub(Rational modulus, std::vector<long> coeffs, long constant = 0) {
        c_.subscripts.push_back({modulus, {std::move(coeffs), constant}});
        return *this;
    }
    SumB& par(std::string name, std::vector<long> coeffs, long constant = 0) {
        c_.params.push_back({std::move(name), {std::move(coeffs), constant}});
        return *this;
    }
    SumB& weight(Scalar coeff, Rational qexp) {
        c_.weight = Monomial(std::move(coeff), std::move(qexp));
        return *this;
    }

    SumComponent build() const {
        SumComponent out = c_;
        long g = 1;
        auto absorb = [&g](const Rational& r) {
            Rational red = r;
            red.canonicalize();
            g = std::lcm<long>(g, red.get_den().get_si());
        };
        for (const auto& row : out.quad.matrix)
            for (const auto& e : row) absorb(e);
        for (const auto& e : out.quad.linear) absorb(e);
        absorb(out.quad.constant);
        absorb(out.weight.qexp);
        for (const auto& s : out.subscripts) absorb(s.modulus);
        out.grid = static_cast<int>(g);
        return out;
    }

private:
    int k_;
    SumComponent c_;
};

SumSideSpec S1(const SumB& b) { return {static_cast<int>(b.build().quad.matrix.size()), {b.build()}}; }
SumSideSpec S2(const SumB& b1, const SumB& b2) {
    return {static_cast<int>(b1.build().quad.matrix.size()), {b1.build(), b2.build()}};
}

using PP = std::initializer_list<std::pair<const char*, int>>;

ProductFactor F(long coeff, Rational qexp, Rational modulus, int power, PP params = {}) {
    ProductFactor f;
    f.coeff = Scalar(coeff);
    f.qexp = std::move(qexp);
    f.modulus = std::move(modulus);
    f.power = power;
    for (const auto& [n, e] : params) f.params[n] = e;
    return f;
}

ProductTerm T(std::vector<ProductFactor> factors) { return {Monomial::one(), std::move(factors)}; }
ProductTerm Tw(Scalar wc, Rational we, std::vector<ProductFactor> factors) {
    return {Monomial(std::move(wc), std::move(we)), std::move(factors)};
}

ProductExpr P(std::vector<ProductTerm> terms) { return {std::move(terms)}; }

/// 1 / prod (q^r; q^m)_inf over the residue list.
ProductExpr inv_residues(std::vector<long> residues, long modulus) {
    ProductTerm t;
    for (long r : residues) t.factors.push_back(F(1, rat(r), rat(modulus), -1));
    return {{t}};
}

ParamAssignment A(std::initializer_list<std::pair<const char*, const char*>> kv) {
    ParamAssignment a;
    for (const auto& [k, v] : kv) a[k] = parse_monomial(v);
    return a;
}

IdentityRecord rec(std::string id, std::string status, std::string anchor, std::string quote,
                   SumSideSpec sum, ProductExpr prod,
                   std::vector<ParamAssignment> sampling = {}) {
    IdentityRecord r;
    r.id = std::move(id);
    r.status = std::move(status);
    r.source = {std::move(anchor), std::move(quote)};
    r.sum_side = std::move(sum);
    r.product_side = std::move(prod);
    r.sampling = std::move(sampling);
    return r;
}

// Andrews-Gordon for 2 <= k, 1 <= i <= k: k-1 indices n_{k-1} .. n_1 with
// exponent sum n_t^2 + n_i + ... + n_{k-1} and staircase subscripts.
IdentityRecord andrews_gordon(int k, int i) {
    int idx = k - 1;
    SumB b(idx);
    for (int t = 0; t < idx; ++t) b.sq(t, rat(1));
    // position t in the index vector stores n_{k-1-t}
    std::vector<Rational> lin(idx, rat(0));
    for (int t = i; t <= k - 1; ++t) lin[static_cast<size_t>(k - 1 - t)] = rat(1);
    b.lin(lin);
    for (int t = 0; t + 1 < idx; ++t) {
        std::vector<long> coeffs(idx, 0);
        coeffs[t] = 1;
        coeffs[t + 1] = -1;
        b.sub(rat(1), coeffs);
    }
    {
        std::vector<long> coeffs(idx, 0);
        coeffs[idx - 1] = 1;
        b.sub(rat(1), coeffs);
    }
    long mod = 2 * k + 1;
    ProductExpr prod = P({T({F(1, rat(i), rat(mod), 1), F(1, rat(mod - i), rat(mod), 1),
                             F(1, rat(mod), rat(mod), 1), F(1, rat(1), rat(1), -1)})});
    return rec("I-ag-k" + std::to_string(k) + "-i" + std::to_string(i), "cited",
               "andrews-gordon-k" + std::to_string(k) + "-i" + std::to_string(i),
               "sum q^(n1^2+..+n" + std::to_string(k - 1) + "^2+n" + std::to_string(i) +
                   "+..)/((q;q)_{n" + std::to_string(k - 1) + "-n" + std::to_string(k - 2) +
                   "}..(q;q)_{n1}) = (q^" + std::to_string(i) + ",q^" + std::to_string(mod - i) +
                   ",q^" + std::to_string(mod) + ";q^" + std::to_string(mod) + ")_inf/(q;q)_inf",
               S1(b), prod);
}

void add_intro_records(Catalog& cat) {
    cat.add(rec("I-rr-1", "cited", "rogers-ramanujan-1",
                "sum q^(n^2)/(q;q)_n = 1/((q,q^4;q^5)_inf)",
                S1(SumB(1).sq(0, rat(1)).sub(rat(1), {1})), inv_residues({1, 4}, 5)));
    cat.add(rec("I-rr-2", "cited", "rogers-ramanujan-2",
                "sum q^(n^2+n)/(q;q)_n = 1/((q^2,q^3;q^5)_inf)",
                S1(SumB(1).sq(0, rat(1)).lin({rat(1)}).sub(rat(1), {1})),
                inv_residues({2, 3}, 5)));
    cat.add(rec("I-slater-1", "cited", "slater-mod16-even",
                "sum q^(2n^2)/(q;q)_{2n} = 1/((q^2,q^3,q^4,q^5,q^11,q^12,q^13,q^14;q^16)_inf)",
                S1(SumB(1).sq(0, rat(2)).sub(rat(1), {2})),
                inv_residues({2, 3, 4, 5, 11, 12, 13, 14}, 16)));
    cat.add(rec("I-slater-2", "cited", "slater-mod16-odd",
                "sum q^(2n(n+1))/(q;q)_{2n+1} = 1/((q,q^4,q^6,q^7,q^9,q^10,q^12,q^15;q^16)_inf)",
                S1(SumB(1).sq(0, rat(2)).lin({rat(2)}).sub(rat(1), {2}, 1)),
                inv_residues({1, 4, 6, 7, 9, 10, 12, 15}, 16)));
    for (int i = 1; i <= 2; ++i) cat.add(andrews_gordon(2, i));
    for (int i = 1; i <= 3; ++i) cat.add(andrews_gordon(3, i));
    cat.add(rec("I-capparelli", "cited", "capparelli-first",
                "sum q^(2i^2+6ij+6j^2)/((q;q)_i (q^3;q^3)_j) = 1/((q^2,q^3,q^9,q^10;q^12)_inf)",
                S1(SumB(2).sq(0, rat(2)).sq(1, rat(6)).cross(0, 1, rat(6))
                       .sub(rat(1), {1, 0}).sub(rat(3), {0, 1})),
                inv_residues({2, 3, 9, 10}, 12)));
    cat.add(rec("I-kursungoz-conj", "conjecture", "kursungoz-mod9",
                "sum q^(i^2+3ij+3j^2)/((q;q)_i (q^3;q^3)_j) = 1/((q,q^3,q^6,q^8;q^9)_inf)",
                S1(SumB(2).sq(0, rat(1)).sq(1, rat(3)).cross(0, 1, rat(3))
                       .sub(rat(1), {1, 0}).sub(rat(3), {0, 1})),
                inv_residues({1, 3, 6, 8}, 9)));
    cat.add(rec("I-au", "cited", "andrews-uncu-mod6",
                "sum (-1)^j q^(3j(3j+1)/2+i^2+3ij+i+j)/((q;q)_i (q^3;q^3)_j) = "
                "1/((q^2,q^3;q^6)_inf)",
                S1(SumB(2).sq(0, rat(1)).sq(1, rat(9, 2)).cross(0, 1, rat(3))
                       .lin({rat(1), rat(5, 2)}).ulin({0, 2})
                       .sub(rat(1), {1, 0}).sub(rat(3), {0, 1})),
                inv_residues({2, 3}, 6)));

    // Kanade-Russell F(u,v,w) and G(u,v,w) specializations.
    auto krF = [](std::vector<Rational> lin) {
        return SumB(3).sq(0, rat(1)).sq(1, rat(4)).sq(2, rat(12))
            .cross(0, 1, rat(4)).cross(0, 2, rat(6)).cross(1, 2, rat(12))
            .lin(std::move(lin)).ulin({0, 0, 2})
            .sub(rat(1), {1, 0, 0}).sub(rat(4), {0, 1, 0}).sub(rat(6), {0, 0, 1});
    };
    cat.add(rec("I-kr-F1", "cited", "kanade-russell-F-1",
                "F(q,1,q^3) = (q^3;q^12)_inf/((q,q^2;q^4)_inf)",
                S1(krF({rat(0), rat(-2), rat(-3)})),
                P({T({F(1, rat(3), rat(12), 1), F(1, rat(1), rat(4), -1),
                      F(1, rat(2), rat(4), -1)})})));
    cat.add(rec("I-kr-F2", "cited", "kanade-russell-F-2",
                "F(q,q,q^6) = 1/((q^3;q^4)_inf (q,q^8;q^12)_inf)",
                S1(krF({rat(0), rat(-1), rat(0)})),
                P({T({F(1, rat(3), rat(4), -1), F(1, rat(1), rat(12), -1),
                      F(1, rat(8), rat(12), -1)})})));
    auto krG = [](std::vector<Rational> lin) {
        return SumB(3).sq(0, rat(1, 2)).sq(1, rat(3)).sq(2, rat(9, 2))
            .cross(0, 1, rat(2)).cross(0, 2, rat(3)).cross(1, 2, rat(6))
            .lin(std::move(lin))
            .sub(rat(1), {1, 0, 0}).sub(rat(2), {0, 1, 0}).sub(rat(3), {0, 0, 1});
    };
    cat.add(rec("I-kr-G1", "cited", "kanade-russell-G-1",
                "G(q,q^2,q^4) = 1/((q;q^3)_inf (q^3,q^6,q^11;q^12)_inf)",
                S1(krG({rat(1, 2), rat(1), rat(5, 2)})),
                P({T({F(1, rat(1), rat(3), -1), F(1, rat(3), rat(12), -1),
                      F(1, rat(6), rat(12), -1), F(1, rat(11), rat(12), -1)})})));
    cat.add(rec("I-kr-G2", "cited", "kanade-russell-G-2",
                "G(q^2,q^4,q^5) = 1/((q^2;q^3)_inf (q^3,q^6,q^7;q^12)_inf)",
                S1(krG({rat(3, 2), rat(3), rat(7, 2)})),
                P({T({F(1, rat(2), rat(3), -1), F(1, rat(3), rat(12), -1),
                      F(1, rat(6), rat(12), -1), F(1, rat(7), rat(12), -1)})})));

    cat.add(rec("I-takigiku-122", "cited", "takigiku-tsuchioka-mod20",
                "sum q^(C(i,2)+8C(j,2)+10C(k,2)+2ij+2ik+8jk+i+4j+5k)/((q;q)_i (q^2;q^2)_j "
                "(q^2;q^2)_k) = 1/((q,q^3,q^4,q^5,q^7,q^9,q^11,q^13,q^15,q^16,q^17,q^19;q^20)_inf)",
                S1(SumB(3).sq(0, rat(1, 2)).sq(1, rat(4)).sq(2, rat(5))
                       .cross(0, 1, rat(2)).cross(0, 2, rat(2)).cross(1, 2, rat(8))
                       .lin({rat(1, 2), rat(0), rat(0)})
                       .sub(rat(1), {1, 0, 0}).sub(rat(2), {0, 1, 0}).sub(rat(2), {0, 0, 1})),
                inv_residues({1, 3, 4, 5, 7, 9, 11, 13, 15, 16, 17, 19}, 20)));
    cat.add(rec("I-laughlin-123", "cited", "mclaughlin-123",
                "sum (-1)^j q^((3k+2j-i)(3k+2j-i-1)/2+j(j-1)-i+6j+6k)/((q;q)_i (q^2;q^2)_j "
                "(q^3;q^3)_k) = (-1;q)_inf (q^18;q^18)_inf/((q^3;q^3)_inf (q^9;q^18)_inf)",
                S1(SumB(3).sq(0, rat(1, 2)).sq(1, rat(3)).sq(2, rat(9, 2))
                       .cross(0, 1, rat(-2)).cross(0, 2, rat(-3)).cross(1, 2, rat(6))
                       .lin({rat(-1, 2), rat(4), rat(9, 2)}).ulin({0, 2, 0})
                       .sub(rat(1), {1, 0, 0}).sub(rat(2), {0, 1, 0}).sub(rat(3), {0, 0, 1})),
                P({T({F(-1, rat(0), rat(1), 1), F(1, rat(18), rat(18), 1),
                      F(1, rat(3), rat(3), -1), F(1, rat(9), rat(18), -1)})})));
    cat.add(rec("I-dl-1112", "proved-in-paper", "dousse-lovejoy-1112",
                "sum a^(i+l) b^(j+l) q^(C(i+j+k+2l+1,2)+C(i+1,2)+C(j+1,2)+l)/((q;q)_i (q;q)_j "
                "(q;q)_k (q^2;q^2)_l) = (-q;q)_inf (-a q^2,-b q^2;q^2)_inf",
                S1(SumB(4).sq(0, rat(1)).sq(1, rat(1)).sq(2, rat(1, 2)).sq(3, rat(2))
                       .cross(0, 1, rat(1)).cross(0, 2, rat(1)).cross(0, 3, rat(2))
                       .cross(1, 2, rat(1)).cross(1, 3, rat(2)).cross(2, 3, rat(2))
                       .lin({rat(1), rat(1), rat(1, 2), rat(2)})
                       .par("a", {1, 0, 0, 1}).par("b", {0, 1, 0, 1})
                       .sub(rat(1), {1, 0, 0, 0}).sub(rat(1), {0, 1, 0, 0})
                       .sub(rat(1), {0, 0, 1, 0}).sub(rat(2), {0, 0, 0, 1})),
                P({T({F(-1, rat(1), rat(1), 1), F(-1, rat(2), rat(2), 1, {{"a", 1}}),
                      F(-1, rat(2), rat(2), 1, {{"b", 1}})})}),
                {A({{"a", "1"}, {"b", "1"}}), A({{"a", "q"}, {"b", "q^2"}}),
                 A({{"a", "-1"}, {"b", "q"}}), A({{"a", "q^(1/2)"}, {"b", "q^(1/2)"}})}));
}

void add_double_sum_records(Catalog& cat) {
    // Index (1,1), symmetric in u and v.
    cat.add(rec("I-11-sym", "proved-in-paper", "two-param-symmetric",
                "sum (-1)^(i+j) u^i v^j q^(((i-j)^2-i-j)/2)/((q;q)_i (q;q)_j) = "
                "(u,v;q)_inf/(u v/q;q)_inf",
                S1(SumB(2).sq(0, rat(1, 2)).sq(1, rat(1, 2)).cross(0, 1, rat(-1))
                       .lin({rat(-1, 2), rat(-1, 2)}).ulin({2, 2})
                       .par("u", {1, 0}).par("v", {0, 1})
                       .sub(rat(1), {1, 0}).sub(rat(1), {0, 1})),
                P({T({F(1, rat(0), rat(1), 1, {{"u", 1}}), F(1, rat(0), rat(1), 1, {{"v", 1}}),
                      F(1, rat(-1), rat(1), -1, {{"u", 1}, {"v", 1}})})}),
                {A({{"u", "-q"}, {"v", "-q^(1/2)"}}), A({{"u", "-q"}, {"v", "-q"}}),
                 A({{"u", "q"}, {"v", "q^2"}}), A({{"u", "i*q"}, {"v", "i*q"}})}));
    cat.add(rec("I-11-sym-cor-1", "proved-in-paper", "two-param-symmetric-cor-half",
                "sum q^(((i-j)^2+i)/2)/((q;q)_i (q;q)_j) = 1/((q^(1/2);q)_inf)^2",
                S1(SumB(2).sq(0, rat(1, 2)).sq(1, rat(1, 2)).cross(0, 1, rat(-1))
                       .lin({rat(1, 2), rat(0)})
                       .sub(rat(1), {1, 0}).sub(rat(1), {0, 1})),
                P({T({F(1, rat(1, 2), rat(1), -2)})})));
    cat.add(rec("I-11-sym-cor-2", "proved-in-paper", "two-param-symmetric-cor-one",
                "sum q^(((i-j)^2+i+j)/2)/((q;q)_i (q;q)_j) = (q^2;q^2)_inf^2/(q;q)_inf^3",
                S1(SumB(2).sq(0, rat(1, 2)).sq(1, rat(1, 2)).cross(0, 1, rat(-1))
                       .lin({rat(1, 2), rat(1, 2)})
                       .sub(rat(1), {1, 0}).sub(rat(1), {0, 1})),
                P({T({F(1, rat(2), rat(2), 2), F(1, rat(1), rat(1), -3)})})));
    cat.add(rec("I-11-sq", "proved-in-paper", "square-exponent-mod2",
                "sum (-1)^(i+j) u^i q^((i-j)^2)/((q^2;q^2)_i (q^2;q^2)_j) = "
                "(u;q)_inf (q;q^2)_inf/(u;q^2)_inf^2",
                S1(SumB(2).sq(0, rat(1)).sq(1, rat(1)).cross(0, 1, rat(-2)).ulin({2, 2})
                       .par("u", {1, 0})
                       .sub(rat(2), {1, 0}).sub(rat(2), {0, 1})),
                P({T({F(1, rat(0), rat(1), 1, {{"u", 1}}), F(1, rat(1), rat(2), 1),
                      F(1, rat(0), rat(2), -2, {{"u", 1}})})}),
                {A({{"u", "-q"}}), A({{"u", "-q^(3/2)"}}), A({{"u", "-q^2"}}),
                 A({{"u", "i*q"}})}));
    cat.add(rec("I-11-theta-a", "proved-in-paper", "theta-difference",
                "sum (-1)^(i+j) q^((i-j)^2/2) (q^j - q^(i+1/2))/((q;q)_i (q;q)_j) = "
                "(q^(1/2);q)_inf^2/(q;q)_inf",
                S2(SumB(2).sq(0, rat(1, 2)).sq(1, rat(1, 2)).cross(0, 1, rat(-1))
                       .lin({rat(0), rat(1)}).ulin({2, 2})
                       .sub(rat(1), {1, 0}).sub(rat(1), {0, 1}),
                   SumB(2).sq(0, rat(1, 2)).sq(1, rat(1, 2)).cross(0, 1, rat(-1))
                       .lin({rat(1), rat(0)}).ulin({2, 2})
                       .weight(-Scalar::one(), rat(1, 2))
                       .sub(rat(1), {1, 0}).sub(rat(1), {0, 1})),
                P({T({F(1, rat(1, 2), rat(1), 2), F(1, rat(1), rat(1), -1)})})));
    cat.add(rec("I-11-theta-b", "proved-in-paper", "theta-sum",
                "sum q^((i-j)^2/2) (q^j + q^(i+1/2))/((q;q)_i (q;q)_j) = "
                "(q;q^2)_inf/((q^2;q^2)_inf (q^(1/2);q)_inf^2)",
                S2(SumB(2).sq(0, rat(1, 2)).sq(1, rat(1, 2)).cross(0, 1, rat(-1))
                       .lin({rat(0), rat(1)})
                       .sub(rat(1), {1, 0}).sub(rat(1), {0, 1}),
                   SumB(2).sq(0, rat(1, 2)).sq(1, rat(1, 2)).cross(0, 1, rat(-1))
                       .lin({rat(1), rat(0)}).weight(Scalar::one(), rat(1, 2))
                       .sub(rat(1), {1, 0}).sub(rat(1), {0, 1})),
                P({T({F(1, rat(1), rat(2), 1), F(1, rat(2), rat(2), -1),
                      F(1, rat(1, 2), rat(1), -2)})})));

    // Jacobi-triple-product family.
    for (long a = 1; a <= 3; ++a) {
        cat.add(rec("I-11-jtp-a" + std::to_string(a), "proved-in-paper",
                    "jtp-general-a" + std::to_string(a),
                    "sum u^(i-j) q^(C(i,2)+C(j+1,2)+" + std::to_string(a) +
                        "C(j-i,2))/((q;q)_i (q;q)_j) = (-u q^" + std::to_string(a) +
                        ",-q/u,q^" + std::to_string(a + 1) + ";q^" + std::to_string(a + 1) +
                        ")_inf/(q;q)_inf",
                    S1(SumB(2).sq(0, rat(1 + a, 2)).sq(1, rat(1 + a, 2)).cross(0, 1, rat(-a))
                           .lin({rat(a - 1, 2), rat(1 - a, 2)})
                           .par("u", {1, -1})
                           .sub(rat(1), {1, 0}).sub(rat(1), {0, 1})),
                    P({T({F(-1, rat(a), rat(a + 1), 1, {{"u", 1}}),
                          F(-1, rat(1), rat(a + 1), 1, {{"u", -1}}),
                          F(1, rat(a + 1), rat(a + 1), 1), F(1, rat(1), rat(1), -1)})}),
                    {A({{"u", "q^(1/2)"}}), A({{"u", "-q^(1/2)"}}), A({{"u", "q"}}),
                     A({{"u", "i*q^(1/2)"}})}));
    }
    cat.add(rec("I-J1-131", "proved-in-paper", "jtp-cor-positive-131",
                "sum q^(2(i^2+j^2)-3ij)/((q;q)_i (q;q)_j) = (-q^2,-q^2,q^4;q^4)_inf/(q;q)_inf",
                S1(SumB(2).sq(0, rat(2)).sq(1, rat(2)).cross(0, 1, rat(-3))
                       .sub(rat(1), {1, 0}).sub(rat(1), {0, 1})),
                P({T({F(-1, rat(2), rat(4), 2), F(1, rat(4), rat(4), 1),
                      F(1, rat(1), rat(1), -1)})})));
    for (long n = 0; n <= 2; ++n) {
        cat.add(rec("I-J2-34" + std::to_string(n), "proved-in-paper",
                    "jtp-cor-alternating-34" + std::to_string(n),
                    "sum (-1)^(i+j) q^((7(i^2+j^2)-8ij+" + std::to_string(2 * n + 1) +
                        "(i-j))/2)/((q^3;q^3)_i (q^3;q^3)_j) = (q^" + std::to_string(3 - n) +
                        ",q^" + std::to_string(4 + n) + ",q^7;q^7)_inf/(q^3;q^3)_inf",
                    S1(SumB(2).sq(0, rat(7, 2)).sq(1, rat(7, 2)).cross(0, 1, rat(-4))
                           .lin({rat(2 * n + 1, 2), rat(-(2 * n + 1), 2)}).ulin({2, 2})
                           .sub(rat(3), {1, 0}).sub(rat(3), {0, 1})),
                    P({T({F(1, rat(3 - n), rat(7), 1), F(1, rat(4 + n), rat(7), 1),
                          F(1, rat(7), rat(7), 1), F(1, rat(3), rat(3), -1)})})));
    }
    for (long a = 1; a <= 2; ++a) {
        cat.add(rec("I-11-twoterm-a" + std::to_string(a), "proved-in-paper",
                    "two-term-theta-a" + std::to_string(a),
                    "sum (-1)^(i+j) u^(i-j) q^((i^2-i+j^2-j+" + std::to_string(4 * a) +
                        "(i-j)^2)/2)/((q;q)_i (q;q)_j) = ((q^" + std::to_string(2 * a) +
                        "/u,u q^" + std::to_string(2 * a + 1) + ",q^" + std::to_string(4 * a + 1) +
                        ";q^" + std::to_string(4 * a + 1) + ")_inf + (u q^" +
                        std::to_string(2 * a) + ",q^" + std::to_string(2 * a + 1) + "/u,q^" +
                        std::to_string(4 * a + 1) + ";q^" + std::to_string(4 * a + 1) +
                        ")_inf)/(q;q)_inf",
                    S1(SumB(2).sq(0, rat(1 + 4 * a, 2)).sq(1, rat(1 + 4 * a, 2))
                           .cross(0, 1, rat(-4 * a)).lin({rat(-1, 2), rat(-1, 2)}).ulin({2, 2})
                           .par("u", {1, -1})
                           .sub(rat(1), {1, 0}).sub(rat(1), {0, 1})),
                    P({T({F(1, rat(2 * a), rat(4 * a + 1), 1, {{"u", -1}}),
                          F(1, rat(2 * a + 1), rat(4 * a + 1), 1, {{"u", 1}}),
                          F(1, rat(4 * a + 1), rat(4 * a + 1), 1), F(1, rat(1), rat(1), -1)}),
                       T({F(1, rat(2 * a), rat(4 * a + 1), 1, {{"u", 1}}),
                          F(1, rat(2 * a + 1), rat(4 * a + 1), 1, {{"u", -1}}),
                          F(1, rat(4 * a + 1), rat(4 * a + 1), 1), F(1, rat(1), rat(1), -1)})}),
                    {A({{"u", "q^(1/2)"}}), A({{"u", "-q^(1/2)"}}), A({{"u", "q"}}),
                     A({{"u", "-1"}})}));
    }
    // Corollaries of the two-term identity at a = 2.
    auto corJ4 = [](std::vector<Rational> lin, std::vector<long> ulin) {
        return SumB(2).sq(0, rat(9, 2)).sq(1, rat(9, 2)).cross(0, 1, rat(-8))
            .lin(std::move(lin)).ulin(std::move(ulin))
            .sub(rat(1), {1, 0}).sub(rat(1), {0, 1});
    };
    cat.add(rec("I-11-twoterm-cor-1", "proved-in-paper", "two-term-cor-u1",
                "sum (-1)^(i+j) q^((i^2-i+j^2-j+8(i-j)^2)/2)/((q;q)_i (q;q)_j) = "
                "2(q^4,q^5,q^9;q^9)_inf/(q;q)_inf",
                S1(corJ4({rat(-1, 2), rat(-1, 2)}, {2, 2})),
                P({Tw(Scalar(2), rat(0),
                      {F(1, rat(4), rat(9), 1), F(1, rat(5), rat(9), 1), F(1, rat(9), rat(9), 1),
                       F(1, rat(1), rat(1), -1)})})));
    cat.add(rec("I-11-twoterm-cor-2", "proved-in-paper", "two-term-cor-um1",
                "sum q^((i^2-i+j^2-j+8(i-j)^2)/2)/((q;q)_i (q;q)_j) = "
                "2(-q^4,-q^5,q^9;q^9)_inf/(q;q)_inf",
                S1(corJ4({rat(-1, 2), rat(-1, 2)}, {0, 0})),
                P({Tw(Scalar(2), rat(0),
                      {F(-1, rat(4), rat(9), 1), F(-1, rat(5), rat(9), 1), F(1, rat(9), rat(9), 1),
                       F(1, rat(1), rat(1), -1)})})));
    cat.add(rec("I-11-twoterm-cor-3", "proved-in-paper", "two-term-cor-uq4",
                "sum (-1)^(i+j) q^(4(i-j)) q^((i^2-i+j^2-j+8(i-j)^2)/2)/((q;q)_i (q;q)_j) = "
                "(q,q^8,q^9;q^9)_inf/(q;q)_inf",
                S1(corJ4({rat(7, 2), rat(-9, 2)}, {2, 2})),
                P({T({F(1, rat(1), rat(9), 1), F(1, rat(8), rat(9), 1), F(1, rat(9), rat(9), 1),
                      F(1, rat(1), rat(1), -1)})})));
    cat.add(rec("I-11-twoterm-cor-4", "proved-in-paper", "two-term-cor-uq5",
                "sum (-1)^(i+j) q^(5(i-j)) q^((i^2-i+j^2-j+8(i-j)^2)/2)/((q;q)_i (q;q)_j) = "
                "(q^-1,q^10,q^9;q^9)_inf/(q;q)_inf",
                S1(corJ4({rat(9, 2), rat(-11, 2)}, {2, 2})),
                P({T({F(1, rat(8), rat(9), 1), F(1, rat(10), rat(9), 1), F(1, rat(9), rat(9), 1),
                      F(1, rat(1), rat(1), -1)}),
                   Tw(-Scalar::one(), rat(-1),
                      {F(1, rat(8), rat(9), 1), F(1, rat(10), rat(9), 1), F(1, rat(9), rat(9), 1),
                       F(1, rat(1), rat(1), -1)})})));

    // Index (1,2).
    auto i12 = [](std::vector<long> upow) {
        return SumB(2).sq(0, rat(1)).sq(1, rat(2)).cross(0, 1, rat(2))
            .lin({rat(-1), rat(-1)}).ulin({2, 0}).par("u", std::move(upow))
            .sub(rat(1), {1, 0}).sub(rat(2), {0, 1});
    };
    cat.add(rec("I-12-a", "proved-in-paper", "index-12-even",
                "sum (-1)^i u^(i+j) q^(i^2+2ij+2j^2-i-j)/((q;q)_i (q^2;q^2)_j) = (u;q^2)_inf",
                S1(i12({1, 1})), P({T({F(1, rat(0), rat(2), 1, {{"u", 1}})})}),
                {A({{"u", "q"}}), A({{"u", "q^2"}}), A({{"u", "i*q^(1/2)"}}),
                 A({{"u", "-q^(1/2)"}})}));
    cat.add(rec("I-12-b", "proved-in-paper", "index-12-odd",
                "sum (-1)^i u^(i+2j) q^(i^2+2ij+2j^2-i-j)/((q;q)_i (q^2;q^2)_j) = (u;q)_inf",
                S1(i12({1, 2})), P({T({F(1, rat(0), rat(1), 1, {{"u", 1}})})}),
                {A({{"u", "q"}}), A({{"u", "-q"}}), A({{"u", "q^(1/2)"}}), A({{"u", "i*q"}})}));
    auto i12c = [](std::vector<Rational> lin, std::vector<long> ulin) {
        return SumB(2).sq(0, rat(1)).sq(1, rat(2)).cross(0, 1, rat(2))
            .lin(std::move(lin)).ulin(std::move(ulin))
            .sub(rat(1), {1, 0}).sub(rat(2), {0, 1});
    };
    cat.add(rec("I-12-a-spec-1", "proved-in-paper", "index-12-even-q",
                "sum (-1)^i q^(i^2+2ij+2j^2)/((q;q)_i (q^2;q^2)_j) = (q;q^2)_inf",
                S1(i12c({rat(0), rat(0)}, {2, 0})), P({T({F(1, rat(1), rat(2), 1)})})));
    cat.add(rec("I-12-a-spec-2", "proved-in-paper", "index-12-even-q2",
                "sum (-1)^i q^(i^2+2ij+2j^2+i+j)/((q;q)_i (q^2;q^2)_j) = (q^2;q^2)_inf",
                S1(i12c({rat(1), rat(1)}, {2, 0})), P({T({F(1, rat(2), rat(2), 1)})})));
    cat.add(rec("I-12-b-spec-1", "proved-in-paper", "index-12-odd-q",
                "sum (-1)^i q^(i^2+2ij+2j^2+j)/((q;q)_i (q^2;q^2)_j) = (q;q)_inf",
                S1(i12c({rat(0), rat(1)}, {2, 0})), P({T({F(1, rat(1), rat(1), 1)})})));
    cat.add(rec("I-12-b-spec-2", "proved-in-paper", "index-12-odd-mq",
                "sum q^(i^2+2ij+2j^2+j)/((q;q)_i (q^2;q^2)_j) = 1/(q;q^2)_inf",
                S1(i12c({rat(0), rat(1)}, {0, 0})), P({T({F(1, rat(1), rat(2), -1)})})));
}

void add_triple_sum_records(Catalog& cat) {
    cat.add(rec("I-111", "proved-in-paper", "index-111-two-param",
                "sum (-1)^(j+k) b1^(i+j) b3^(i+k) q^((i^2+(i+j+k)^2-2i-j-k)/2)/((q;q)_i (q;q)_j "
                "(q;q)_k) = (b1,b3;q)_inf",
                S1(SumB(3).sq(0, rat(1)).sq(1, rat(1, 2)).sq(2, rat(1, 2))
                       .cross(0, 1, rat(1)).cross(0, 2, rat(1)).cross(1, 2, rat(1))
                       .lin({rat(-1), rat(-1, 2), rat(-1, 2)}).ulin({0, 2, 2})
                       .par("b1", {1, 1, 0}).par("b3", {1, 0, 1})
                       .sub(rat(1), {1, 0, 0}).sub(rat(1), {0, 1, 0}).sub(rat(1), {0, 0, 1})),
                P({T({F(1, rat(0), rat(1), 1, {{"b1", 1}}), F(1, rat(0), rat(1), 1, {{"b3", 1}})})}),
                {A({{"b1", "-q^(1/4)"}, {"b3", "-q^(1/2)"}}), A({{"b1", "q"}, {"b3", "q^2"}}),
                 A({{"b1", "-1"}, {"b3", "q"}}), A({{"b1", "q^(1/2)"}, {"b3", "i*q"}})}));
    cat.add(rec("I-112-a", "proved-in-paper", "index-112-bc",
                "sum (-1)^(i+j) b^(j-i) c^(i-j+k) q^((i^2+(i-j+2k)^2-2i+3j-2k)/2)/((q;q)_i "
                "(q;q)_j (q^2;q^2)_k) = (-q,b q^2/c;q)_inf (b q,c/b;q^2)_inf/(b^2 q^2/c;q^2)_inf",
                S1(SumB(3).sq(0, rat(1)).sq(1, rat(1, 2)).sq(2, rat(2))
                       .cross(0, 1, rat(-1)).cross(0, 2, rat(2)).cross(1, 2, rat(-2))
                       .lin({rat(-1), rat(3, 2), rat(-1)}).ulin({2, 2, 0})
                       .par("b", {-1, 1, 0}).par("c", {1, -1, 1})
                       .sub(rat(1), {1, 0, 0}).sub(rat(1), {0, 1, 0}).sub(rat(2), {0, 0, 1})),
                P({T({F(-1, rat(1), rat(1), 1),
                      F(1, rat(2), rat(1), 1, {{"b", 1}, {"c", -1}}),
                      F(1, rat(1), rat(2), 1, {{"b", 1}}),
                      F(1, rat(0), rat(2), 1, {{"b", -1}, {"c", 1}}),
                      F(1, rat(2), rat(2), -1, {{"b", 2}, {"c", -1}})})}),
                {A({{"b", "q^(1/2)"}, {"c", "q^2"}}), A({{"b", "-q^(1/2)"}, {"c", "q^2"}}),
                 A({{"b", "q^(1/2)"}, {"c", "q"}}), A({{"b", "i*q^(1/2)"}, {"c", "q^2"}})}));
    cat.add(rec("I-112-b", "proved-in-paper", "index-112-cd",
                "sum (-1)^i c^(2i-j+2k) d^j q^((i^2+(i-j+2k)^2-2i+j-2k)/2)/((q;q)_i (q;q)_j "
                "(q^2;q^2)_k) = (-d q/c;q)_inf (c^2;q^2)_inf/(d^2;q^2)_inf",
                S1(SumB(3).sq(0, rat(1)).sq(1, rat(1, 2)).sq(2, rat(2))
                       .cross(0, 1, rat(-1)).cross(0, 2, rat(2)).cross(1, 2, rat(-2))
                       .lin({rat(-1), rat(1, 2), rat(-1)}).ulin({2, 0, 0})
                       .par("c", {2, -1, 2}).par("d", {0, 1, 0})
                       .sub(rat(1), {1, 0, 0}).sub(rat(1), {0, 1, 0}).sub(rat(2), {0, 0, 1})),
                P({T({F(-1, rat(1), rat(1), 1, {{"c", -1}, {"d", 1}}),
                      F(1, rat(0), rat(2), 1, {{"c", 2}}),
                      F(1, rat(0), rat(2), -1, {{"d", 2}})})}),
                {A({{"c", "q^(1/2)"}, {"d", "q^(1/4)"}}),
                 A({{"c", "q^(1/2)"}, {"d", "q^(3/4)"}}), A({{"c", "q"}, {"d", "q^(1/2)"}}),
                 A({{"c", "-q"}, {"d", "q"}})}));
    cat.add(rec("I-113", "proved-in-paper", "index-113-cube",
                "sum (-1)^k u^(2i+j+3k) q^((i^2+j^2+(i+j+3k)^2-2i-2j-3k)/2)/((q;q)_i (q;q)_j "
                "(q^3;q^3)_k) = (u^3;q^3)_inf/(u;q)_inf",
                S1(SumB(3).sq(0, rat(1)).sq(1, rat(1)).sq(2, rat(9, 2))
                       .cross(0, 1, rat(1)).cross(0, 2, rat(3)).cross(1, 2, rat(3))
                       .lin({rat(-1), rat(-1), rat(-3, 2)}).ulin({0, 0, 2})
                       .par("u", {2, 1, 3})
                       .sub(rat(1), {1, 0, 0}).sub(rat(1), {0, 1, 0}).sub(rat(3), {0, 0, 1})),
                P({T({F(1, rat(0), rat(3), 1, {{"u", 3}}), F(1, rat(0), rat(1), -1, {{"u", 1}})})}),
                {A({{"u", "q"}}), A({{"u", "q^(1/2)"}}), A({{"u", "-q"}}), A({{"u", "i*q"}})}));
    cat.add(rec("I-122-a", "proved-in-paper", "index-122-first",
                "sum (-1)^j q^(i+j^2+2j+(i+j-k)^2)/((q;q)_i (q^2;q^2)_j (q^2;q^2)_k) = "
                "(q^2;q^2)_inf (q^4;q^4)_inf^2/(q;q)_inf^2",
                S1(SumB(3).sq(0, rat(1)).sq(1, rat(2)).sq(2, rat(1))
                       .cross(0, 1, rat(2)).cross(0, 2, rat(-2)).cross(1, 2, rat(-2))
                       .lin({rat(1), rat(2), rat(0)}).ulin({0, 2, 0})
                       .sub(rat(1), {1, 0, 0}).sub(rat(2), {0, 1, 0}).sub(rat(2), {0, 0, 1})),
                P({T({F(1, rat(2), rat(2), 1), F(1, rat(4), rat(4), 2),
                      F(1, rat(1), rat(1), -2)})})));
    cat.add(rec("I-122-b", "proved-in-paper", "index-122-second",
                "sum (-1)^j q^(j^2+j+k) (q^((i+j-k)^2) + q^((i+j-k+1)^2))/((q;q)_i (q^2;q^2)_j "
                "(q^2;q^2)_k) = (q^2;q^2)_inf^7/((q;q)_inf^4 (q^4;q^4)_inf^2)",
                S2(SumB(3).sq(0, rat(1)).sq(1, rat(2)).sq(2, rat(1))
                       .cross(0, 1, rat(2)).cross(0, 2, rat(-2)).cross(1, 2, rat(-2))
                       .lin({rat(0), rat(1), rat(1)}).ulin({0, 2, 0})
                       .sub(rat(1), {1, 0, 0}).sub(rat(2), {0, 1, 0}).sub(rat(2), {0, 0, 1}),
                   SumB(3).sq(0, rat(1)).sq(1, rat(2)).sq(2, rat(1))
                       .cross(0, 1, rat(2)).cross(0, 2, rat(-2)).cross(1, 2, rat(-2))
                       .lin({rat(2), rat(3), rat(-1)}).cst(rat(1)).ulin({0, 2, 0})
                       .sub(rat(1), {1, 0, 0}).sub(rat(2), {0, 1, 0}).sub(rat(2), {0, 0, 1})),
                P({T({F(1, rat(2), rat(2), 7), F(1, rat(1), rat(1), -4),
                      F(1, rat(4), rat(4), -2)})})));
    auto i123 = [] {
        return SumB(3).sq(0, rat(3, 4)).sq(1, rat(1)).sq(2, rat(9, 4))
            .cross(0, 1, rat(-1)).cross(0, 2, rat(3, 2)).cross(1, 2, rat(-3))
            .lin({rat(-1, 2), rat(0), rat(0)})
            .sub(rat(1), {1, 0, 0}).sub(rat(2), {0, 1, 0}).sub(rat(3), {0, 0, 1});
    };
    cat.add(rec("I-123-frac", "proved-in-paper", "index-123-quarter-grid",
                "sum (-1)^(i+j) u^(i+3k) q^((i^2-i)/2+(i-2j+3k)^2/4)/((q;q)_i (q^2;q^2)_j "
                "(q^3;q^3)_k) = (u^2;q)_inf (q,-u^2;q^2)_inf/(-u^6;q^6)_inf",
                S1(i123().ulin({2, 2, 0}).par("u", {1, 0, 3})),
                P({T({F(1, rat(0), rat(1), 1, {{"u", 2}}), F(1, rat(1), rat(2), 1),
                      F(-1, rat(0), rat(2), 1, {{"u", 2}}),
                      F(-1, rat(0), rat(6), -1, {{"u", 6}})})}),
                {A({{"u", "q^(1/2)"}}), A({{"u", "q"}}), A({{"u", "q^(3/2)"}}),
                 A({{"u", "-q^(1/2)"}}), A({{"u", "i*q^(1/2)"}})}));
    cat.add(rec("I-123-gauss", "proved-in-paper", "index-123-unit-power",
                "sum i^(i-2j+3k) u^(i+k) q^((i^2-i)/2+(i-2j+3k)^2/4)/((q;q)_i (q^2;q^2)_j "
                "(q^3;q^3)_k) = (q;q^2)_inf (-u^2;q^3)_inf/(u^2;q^6)_inf",
                S1(i123().ulin({1, -2, 3}).par("u", {1, 0, 1})),
                P({T({F(1, rat(1), rat(2), 1), F(-1, rat(0), rat(3), 1, {{"u", 2}}),
                      F(1, rat(0), rat(6), -1, {{"u", 2}})})}),
                {A({{"u", "q^(3/2)"}}), A({{"u", "-q^(3/2)"}}), A({{"u", "q^(1/2)"}}),
                 A({{"u", "q"}}), A({{"u", "i*q^(1/2)"}})}));
    auto i124 = [](std::vector<Rational> lin, std::vector<long> ulin) {
        return SumB(3).sq(0, rat(1)).sq(1, rat(1)).sq(2, rat(6))
            .cross(0, 1, rat(2)).cross(0, 2, rat(4)).cross(1, 2, rat(4))
            .lin(std::move(lin)).ulin(std::move(ulin))
            .sub(rat(1), {1, 0, 0}).sub(rat(2), {0, 1, 0}).sub(rat(4), {0, 0, 1});
    };
    cat.add(rec("I-124-a", "proved-in-paper", "index-124-general",
                "sum (-1)^k q^((i+j+2k)(i+j+2k-1)+j+2k^2) u^(i+2j+4k)/((q;q)_i (q^2;q^2)_j "
                "(q^4;q^4)_k) = (-u;q)_inf",
                S1(i124({rat(-1), rat(0), rat(-2)}, {0, 0, 2}).par("u", {1, 2, 4})),
                P({T({F(-1, rat(0), rat(1), 1, {{"u", 1}})})}),
                {A({{"u", "q"}}), A({{"u", "q^2"}}), A({{"u", "-q"}}), A({{"u", "q^(1/2)"}}),
                 A({{"u", "i*q"}})}));
    cat.add(rec("I-124-b", "proved-in-paper", "index-124-mod16",
                "sum (-1)^j q^((i+j+2k)(i+j+2k-1)+2i+3j+2k^2+6k)/((q;q)_i (q^2;q^2)_j "
                "(q^4;q^4)_k) = (q^4,q^12,q^16;q^16)_inf/(q^2;q^2)_inf",
                S1(i124({rat(1), rat(2), rat(4)}, {0, 2, 0})),
                P({T({F(1, rat(4), rat(16), 1), F(1, rat(12), rat(16), 1),
                      F(1, rat(16), rat(16), 1), F(1, rat(2), rat(2), -1)})})));
    cat.add(rec("I-124-c", "proved-in-paper", "index-124-mod8",
                "sum (-1)^j q^((i+j+2k)^2+2k^2)/((q;q)_i (q^2;q^2)_j (q^4;q^4)_k) = "
                "(q^8;q^8)_inf^2/((q^2;q^2)_inf (q^16;q^16)_inf)",
                S1(i124({rat(0), rat(0), rat(0)}, {0, 2, 0})),
                P({T({F(1, rat(8), rat(8), 2), F(1, rat(2), rat(2), -1),
                      F(1, rat(16), rat(16), -1)})})));
}

} // namespace

const Catalog& Catalog::builtin() {
    static const Catalog cat = [] {
        Catalog c;
        add_intro_records(c);
        add_double_sum_records(c);
        add_triple_sum_records(c);
        return c;
    }();
    return cat;
}

void Catalog::add(IdentityRecord r) {
    auto pos = std::lower_bound(records_.begin(), records_.end(), r.id,
                                [](const IdentityRecord& a, const std::string& id) { return a.id < id; });
    if (pos != records_.end() && pos->id == r.id)
        raise(ErrorKind::Internal, "duplicate catalog id " + r.id);
    records_.insert(pos, std::move(r));
}

const IdentityRecord* Catalog::find(const std::string& id) const {
    auto pos = std::lower_bound(records_.begin(), records_.end(), id,
                                [](const IdentityRecord& a, const std::string& i) { return a.id < i; });
    if (pos != records_.end() && pos->id == id) return &*pos;
    return nullptr;
}

} // namespace qrsid
