#include "eqc/cache.hpp"

#include <fstream>

#include "eqc/spoly_io.hpp"

namespace eqc {

namespace {

nlohmann::json parts_json(const StrictPartition& p) {
    nlohmann::json a = nlohmann::json::array();
    for (unsigned v : p.parts()) a.push_back(v);
    return a;
}

StrictPartition parts_from_json(const nlohmann::json& a) {
    std::vector<unsigned> parts;
    for (const auto& v : a) parts.push_back(v.get<unsigned>());
    return StrictPartition(parts);
}

}  // namespace

nlohmann::json expansion_terms_json(const ClassExpansion& exp) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [nu, d, coeff] : exp.terms())
        terms.push_back(
            {{"nu", parts_json(nu)}, {"d", d}, {"coeff", coeff_to_string(coeff)}});
    return terms;
}

ClassExpansion expansion_from_terms_json(const nlohmann::json& terms) {
    ClassExpansion exp;
    for (const auto& term : terms) {
        StrictPartition nu = parts_from_json(term.at("nu"));
        unsigned d = term.at("d").get<unsigned>();
        SPoly coeff = parse_poly(term.at("coeff").get<std::string>());
        if (d > 0) coeff *= SPoly::variable(VarId::q(), d);
        exp.coeff[nu] += coeff;
    }
    for (auto it = exp.coeff.begin(); it != exp.coeff.end();)
        it = it->second.is_zero() ? exp.coeff.erase(it) : std::next(it);
    return exp;
}

namespace {

ClassExpansion table_entry(const StrictPartition& lambda, const StrictPartition& mu,
                           const RingContext& ctx, bool type_b) {
    ClassExpansion exp = schubert_product(lambda, mu, ctx);
    return type_b ? specialize(exp, SpecializeMode::TypeB, ctx) : exp;
}

}  // namespace

nlohmann::json table_json(const RingContext& ctx, bool type_b) {
    if (type_b && ctx.type != LieType::D)
        throw std::invalid_argument("type B tables come from a type D context");
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& lambda : ctx.basis)
        for (const auto& mu : ctx.basis)
            entries.push_back(
                {{"lambda", parts_json(lambda)},
                 {"mu", parts_json(mu)},
                 {"terms", expansion_terms_json(table_entry(lambda, mu, ctx, type_b))}});
    return {{"schema_version", kCacheSchemaVersion},
            {"type", type_b ? "B" : std::string(1, lie_type_char(ctx.type))},
            {"n", ctx.n},
            {"deg_q", ctx.deg_q},
            {"entries", entries}};
}

std::filesystem::path table_path(const std::filesystem::path& dir, const RingContext& ctx,
                                 bool type_b) {
    char label = type_b ? 'B' : lie_type_char(ctx.type);
    return dir / (std::string("table_") + label + std::to_string(ctx.n) + ".json");
}

void write_table_file(const std::filesystem::path& dir, const RingContext& ctx, bool type_b) {
    std::filesystem::create_directories(dir);
    nlohmann::json j = table_json(ctx, type_b);
    std::filesystem::path final_path = table_path(dir, ctx, type_b);
    std::filesystem::path tmp = final_path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        out << j.dump(2) << "\n";
    }
    std::filesystem::rename(tmp, final_path);
}

void validate_table_file(const std::filesystem::path& file, const RingContext& ctx,
                         bool type_b) {
    std::ifstream in(file);
    if (!in) throw std::invalid_argument("cannot open cache file " + file.string());
    nlohmann::json j;
    in >> j;
    if (j.value("schema_version", -1) != kCacheSchemaVersion)
        throw std::invalid_argument("cache schema version mismatch in " + file.string());
    std::string label = type_b ? "B" : std::string(1, lie_type_char(ctx.type));
    if (j.at("type").get<std::string>() != label || j.at("n").get<unsigned>() != ctx.n ||
        j.at("deg_q").get<unsigned>() != ctx.deg_q)
        throw std::invalid_argument("cache context mismatch in " + file.string());
    for (const auto& entry : j.at("entries")) {
        StrictPartition lambda = parts_from_json(entry.at("lambda"));
        StrictPartition mu = parts_from_json(entry.at("mu"));
        ClassExpansion cached = expansion_from_terms_json(entry.at("terms"));
        ClassExpansion fresh = table_entry(lambda, mu, ctx, type_b);
        if (!(cached == fresh))
            throw internal_error("cached product disagrees with recomputation at (" +
                                 lambda.to_string() + ")*(" + mu.to_string() + ")");
    }
}

}  // namespace eqc
