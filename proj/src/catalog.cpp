#include "nilclean/catalog.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <thread>

#include "nilclean/io.hpp"

namespace nilclean {

namespace {

std::string join(const std::vector<std::string>& names) {
    std::string out;
    for (const auto& n : names) out += (out.empty() ? "" : ", ") + n;
    return out;
}

std::map<std::string, bool> class_expectation(bool s2nc, bool znc) {
    return {{"S2NC", s2nc}, {"ZNC", znc}};
}

// Z/n is strongly 2-nil-clean iff no prime factor exceeds 3, and Zhou
// nil-clean iff none exceeds 5.
std::map<std::string, bool> modulus_expectation(std::uint64_t n) {
    bool s2nc = true, znc = true;
    for (std::uint64_t p = 2; p <= n; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        if (p > 3) s2nc = false;
        if (p > 5) znc = false;
    }
    return class_expectation(s2nc, znc);
}

std::map<std::string, bool> combine(const std::map<std::string, bool>& x,
                                    const std::map<std::string, bool>& y) {
    return class_expectation(x.at("S2NC") && y.at("S2NC"), x.at("ZNC") && y.at("ZNC"));
}

}  // namespace

UnknownName::UnknownName(std::string_view name, const std::vector<std::string>& known)
    : RingError("unknown catalog ring '" + std::string(name) + "' (known: " + join(known) + ")") {}

RingTable cayley_table_ring() {
    // a b c d -> 0 1 2 3
    constexpr std::uint32_t kAdd[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    constexpr std::uint32_t kMul[4][4] = {{0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}};
    std::vector<ElementId> add, mul;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            add.emplace_back(kAdd[i][j]);
            mul.emplace_back(kMul[i][j]);
        }
    return RingTable(4, std::move(add), std::move(mul), ElementId(0), ElementId(1), "example3.5");
}

RingTable matrix_field_of_order_9() {
    struct Mat {
        int m[2][2];
    };
    auto make = [](int x, int y) { return Mat{{{x, y}, {y, (x + y) % 3}}}; };
    auto index_of = [](const Mat& a) {
        // Closed under + and *, so the result must again have the [[x,y],[y,x+y]] form.
        if (a.m[1][0] != a.m[0][1] || a.m[1][1] != (a.m[0][0] + a.m[0][1]) % 3)
            throw std::logic_error("matrix left the [[x,y],[y,x+y]] family");
        return ElementId(static_cast<std::uint32_t>(3 * a.m[0][0] + a.m[0][1]));
    };
    std::vector<Mat> elems;
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y) elems.push_back(make(x, y));

    std::vector<ElementId> add, mul;
    for (const Mat& a : elems)
        for (const Mat& b : elems) {
            Mat s{}, p{};
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) {
                    s.m[i][j] = (a.m[i][j] + b.m[i][j]) % 3;
                    p.m[i][j] = (a.m[i][0] * b.m[0][j] + a.m[i][1] * b.m[1][j]) % 3;
                }
            add.push_back(index_of(s));
            mul.push_back(index_of(p));
        }
    return RingTable(9, std::move(add), std::move(mul), index_of(make(0, 0)), index_of(make(1, 0)),
                     "example3.6");
}

Catalog Catalog::builtin() {
    Catalog c;
    c.entries_.push_back({"example3.5", cayley_table_ring(),
                          "4-element ring from addition/multiplication tables on {a,b,c,d}",
                          {{"S2NC", false}, {"ZNC", false}, {"CUBES-IDEMPOTENT", true}}});
    c.entries_.push_back({"example3.6", matrix_field_of_order_9(),
                          "matrices [[x,y],[y,x+y]] over Z/3",
                          {{"S2NC", false}, {"ZNC", false}, {"ZNC-SQ-5P", true}}});
    c.entries_.push_back({"Z5", make_zn(5).relabeled("Z5"),
                          "Z/5",
                          {{"S2NC", false},
                           {"ZNC", true},
                           {"S2NC-SQ-3E", false},
                           {"S2NC-SQ-4E", true}}});
    return c;
}

Catalog Catalog::load(const std::filesystem::path& dir) {
    const auto read_json = [](const std::filesystem::path& path) {
        std::ifstream in(path);
        if (!in) throw RingError("cannot open " + path.string());
        try {
            return Json::parse(in);
        } catch (const Json::exception& e) {
            throw RingError("cannot parse " + path.string() + ": " + e.what());
        }
    };
    const Json manifest = read_json(dir / "manifest.json");
    Catalog c;
    c.survey_version_ = manifest.value("survey_version", 0);
    if (c.survey_version_ != kSurveyVersion)
        throw RingError("catalog manifest survey_version " + std::to_string(c.survey_version_) +
                        " does not match " + std::to_string(kSurveyVersion));
    for (const Json& item : manifest.at("rings")) {
        const auto name = item.at("name").get<std::string>();
        RingTable ring = ring_from_json(read_json(dir / item.at("file").get<std::string>()),
                                        BuildOptions{});
        c.entries_.push_back({name, ring.relabeled(name), item.value("provenance", std::string()),
                              item.value("expected", std::map<std::string, bool>{})});
    }
    return c;
}

void Catalog::save(const std::filesystem::path& dir) const {
    std::filesystem::create_directories(dir);
    Json rings = Json::array();
    for (const auto& e : entries_) {
        const std::string file = e.name + ".json";
        std::ofstream(dir / file) << ring_to_json(e.ring).dump() << '\n';
        rings.push_back(
            {{"name", e.name}, {"file", file}, {"provenance", e.provenance}, {"expected", e.expected}});
    }
    std::ofstream(dir / "manifest.json")
        << Json{{"survey_version", survey_version_}, {"rings", std::move(rings)}}.dump(2) << '\n';
}

const Catalog& Catalog::standard() {
    static const Catalog instance = [] {
        if (const char* env = std::getenv("NILCLEAN_CATALOG_DIR"); env && *env) return load(env);
#ifdef NILCLEAN_DEFAULT_CATALOG_DIR
        if (std::filesystem::exists(std::filesystem::path(NILCLEAN_DEFAULT_CATALOG_DIR) / "manifest.json"))
            return load(NILCLEAN_DEFAULT_CATALOG_DIR);
#endif
        return builtin();
    }();
    return instance;
}

const CatalogEntry& Catalog::get(std::string_view name) const {
    for (const auto& e : entries_)
        if (e.name == name) return e;
    throw UnknownName(name, names());
}

std::vector<std::string> Catalog::names() const {
    std::vector<std::string> out;
    for (const auto& e : entries_) out.push_back(e.name);
    return out;
}

const CatalogEntry& get_ring(std::string_view name) { return Catalog::standard().get(name); }

std::vector<CatalogEntry> survey_set(std::size_t max_order, const BuildOptions& opts) {
    std::vector<CatalogEntry> out;
    for (std::uint64_t n = 2; n <= max_order; ++n)
        out.push_back({"Z/" + std::to_string(n), make_zn(n, opts), "make_zn(" + std::to_string(n) + ")",
                       modulus_expectation(n)});

    struct FieldSpec {
        std::uint64_t p;
        unsigned k;
        std::size_t q;
    };
    for (auto [p, k, q] : {FieldSpec{2, 2, 4}, FieldSpec{2, 3, 8}, FieldSpec{3, 2, 9}, FieldSpec{5, 2, 25}}) {
        if (q > max_order) continue;
        RingTable f = make_gf(p, k, opts);
        out.push_back({f.label(), f,
                       "make_gf(" + std::to_string(p) + ", " + std::to_string(k) + ")",
                       class_expectation(false, false)});
    }

    for (std::uint64_t a = 2; a * a <= max_order; ++a)
        for (std::uint64_t b = a; a * b <= max_order; ++b) {
            RingTable r = make_product(make_zn(a, opts), make_zn(b, opts), opts);
            out.push_back({r.label(), r,
                           "make_product(make_zn(" + std::to_string(a) + "), make_zn(" +
                               std::to_string(b) + "))",
                           combine(modulus_expectation(a), modulus_expectation(b))});
        }

    for (std::uint64_t q : {2, 3}) {
        if (q * q * q * q > max_order) continue;
        RingTable m = make_matrix_ring(make_zn(q, opts), 2, opts);
        out.push_back({m.label(), m, "make_matrix_ring(make_zn(" + std::to_string(q) + "), 2)",
                       class_expectation(false, false)});
    }

    for (const auto& e : Catalog::standard().entries()) out.push_back(e);
    return out;
}

std::vector<std::string> expectation_mismatches(const CatalogEntry& entry,
                                                const CharacterizationReport& rep) {
    std::vector<std::string> out;
    for (const auto& [key, value] : entry.expected) {
        bool actual = false;
        if (key == "S2NC") {
            actual = rep.strongly_2_nil_clean;
        } else if (key == "ZNC") {
            actual = rep.zhou_nil_clean;
        } else if (key == "CUBES-IDEMPOTENT") {
            actual = cubes_are_idempotent(entry.ring).holds;
        } else {
            actual = rep.predicates.at(parse_characterization_id(key)).holds;
        }
        if (actual != value) out.push_back(key);
    }
    return out;
}

std::vector<SurveyRow> run_survey(const std::vector<CatalogEntry>& entries, unsigned threads) {
    if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, entries.size())));

    std::vector<SurveyRow> rows(entries.size());
    std::vector<std::exception_ptr> errors(entries.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < entries.size(); i = next++) {
            try {
                const CatalogEntry& e = entries[i];
                CharacterizationReport rep = cross_check(e.ring);
                rows[i] = SurveyRow{e.name, rep, expectation_mismatches(e, rep)};
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    for (const auto& err : errors)
        if (err) std::rethrow_exception(err);
    return rows;
}

}  // namespace nilclean
