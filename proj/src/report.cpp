#include "redei/report.hpp"

#include <string>

namespace redei {

namespace {

Json count_json(const BigInt& v) {
    if (fits_u64(v)) return to_u64(v);
    return to_decimal(v);
}

Json header(std::uint64_t q, Chi chi) {
    Json j;
    j["q"] = q;
    j["chi"] = to_int(chi);
    return j;
}

}  // namespace

Json structure_json(const CycleStructure& s) {
    Json j = Json::object();
    for (const auto& [length, count] : s.counts()) j[std::to_string(length)] = count_json(count);
    return j;
}

Json classes_json(std::uint64_t q, Chi chi, const std::vector<StructureClass>& classes) {
    Json j = header(q, chi);
    Json list = Json::array();
    for (const auto& cls : classes) {
        Json entry;
        entry["members"] = cls.members;
        entry["structure"] = structure_json(cls.structure);
        list.push_back(std::move(entry));
    }
    j["classes"] = std::move(list);
    return j;
}

Json pairs_json(const PairCatalog& catalog) {
    const std::uint64_t N = group_order(catalog.q, catalog.chi);
    Json j = header(catalog.q, catalog.chi);
    Json list = Json::array();
    for (const auto& [m, n] : catalog.pairs) {
        Json entry;
        entry["m"] = m;
        entry["n"] = n;
        entry["line_offset"] = (n + N - m) % N;
        list.push_back(std::move(entry));
    }
    j["pairs"] = std::move(list);
    return j;
}

void write_pairs_csv(std::ostream& out, const PairCatalog& catalog) {
    const std::uint64_t N = group_order(catalog.q, catalog.chi);
    out << "m,n,line_offset\n";
    for (const auto& [m, n] : catalog.pairs) out << m << ',' << n << ',' << (n + N - m) % N << '\n';
}

Json isolated_json(std::uint64_t q, Chi chi, const std::vector<std::uint64_t>& isolated, std::uint64_t formula) {
    Json j = header(q, chi);
    j["isolated"] = isolated;
    j["formula"] = formula;
    return j;
}

Json family_json(const FamilyPrediction& p) {
    Json j;
    j["family"] = p.family;
    j["q"] = to_decimal(p.q);
    j["chi"] = to_int(p.chi);
    j["pair"] = Json::array({to_decimal(p.m), to_decimal(p.n)});
    j["structure"] = p.structure ? structure_json(*p.structure) : Json(nullptr);
    j["applicable"] = p.applicable;
    j["reason"] = p.reason;
    return j;
}

std::string family_text(const FamilyPrediction& p) {
    std::string out = p.family + ": q = " + to_decimal(p.q) + ", chi = " + std::to_string(to_int(p.chi)) + "\n";
    out += "pair: (" + to_decimal(p.m) + ", " + to_decimal(p.n) + ")\n";
    out += std::string("in S: ") + (p.applicable ? "yes" : "no") + " (" + p.reason + ")\n";
    if (p.structure) out += "structure: " + p.structure->to_text() + "\n";
    return out;
}

}  // namespace redei
