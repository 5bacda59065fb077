#include "bow/json_io.hpp"

namespace bow {

Json to_json(const BraneTriple& t) {
    return Json{{"d", t.d}, {"e", t.e}, {"f", t.f}};
}

BraneTriple triple_from_json(const Json& j) {
    BraneTriple t;
    t.d = j.at("d").get<i64>();
    t.e = j.at("e").get<std::vector<i64>>();
    t.f = j.at("f").get<std::vector<i64>>();
    if (t.e.empty() || t.f.empty())
        throw std::invalid_argument("triple_from_json: need n, m >= 1");
    return t;
}

Json to_json(const MayaDiagram& M) {
    Json blocks = Json::array();
    for (int b = 0; b < M.stored_blocks(); ++b) {
        Json rows = Json::array();
        for (int i = 0; i < M.n(); ++i) {
            Json row = Json::array();
            for (int j = 0; j < M.m(); ++j) row.push_back(static_cast<int>(M.block(b)[i * M.m() + j]));
            rows.push_back(std::move(row));
        }
        blocks.push_back(std::move(rows));
    }
    return Json{{"n", M.n()}, {"m", M.m()}, {"two_k_lo", M.two_k_lo()}, {"blocks", blocks}};
}

MayaDiagram maya_from_json(const Json& j) {
    const int n = j.at("n").get<int>();
    const int m = j.at("m").get<int>();
    const i64 two_k_lo = j.at("two_k_lo").get<i64>();
    std::vector<std::vector<std::uint8_t>> blocks;
    for (const Json& rows : j.at("blocks")) {
        std::vector<std::uint8_t> blk;
        for (const Json& row : rows)
            for (const Json& v : row) blk.push_back(v.get<std::uint8_t>());
        blocks.push_back(std::move(blk));
    }
    return MayaDiagram::from_blocks(n, m, two_k_lo, std::move(blocks));
}

Json to_json(const KClass& X) {
    Json out = Json::array();
    for (const auto& [mon, c] : X.terms())
        out.push_back(Json{{"a", mon.a}, {"b", mon.b}, {"w", mon.w}, {"coeff", c}});
    return out;
}

KClass kclass_from_json(const Json& j) {
    KClass X;
    bool first = true;
    for (const Json& term : j) {
        auto w = term.at("w").get<std::vector<i64>>();
        if (first) {
            X = KClass(static_cast<int>(w.size()));
            first = false;
        }
        X.add_monomial(term.at("a").get<i64>(), term.at("b").get<i64>(), std::move(w),
                       term.at("coeff").get<i64>());
    }
    return X;
}

Json to_json(const QSeries& s) {
    return Json{{"q_order", s.order}, {"coeffs", s.coeffs}};
}

Json to_json(const QTSeries& s) {
    Json coeffs = Json::array();
    for (i64 d = 0; d <= s.order; ++d) {
        Json poly = Json::array();
        for (const auto& [te, c] : s.coeffs[d]) poly.push_back(Json::array({te, c}));
        coeffs.push_back(std::move(poly));
    }
    return Json{{"q_order", s.order}, {"coeffs", coeffs}};
}

}  // namespace bow
