#include <doctest.h>

#include "mirrorlat/verify.hpp"

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>

using namespace mirrorlat;
namespace fs = std::filesystem;

namespace {

std::string data_dir() {
    if (const char* env = std::getenv("MIRRORLAT_DATA_DIR")) return env;
    return MIRRORLAT_DATA_DIR;
}

// copy of the dataset with one JSON-level mutation applied to tables.json
struct MutatedDataset {
    fs::path dir;

    explicit MutatedDataset(const std::function<void(nlohmann::json&)>& mutate) {
        dir = fs::temp_directory_path() /
              ("mirrorlat_mut_" + std::to_string(std::rand()) + std::to_string(std::rand()));
        fs::create_directories(dir / "configs");
        for (const char* f : {"table1.json", "tables.json", "geometry.json",
                              "weight_systems.json"})
            fs::copy_file(fs::path(data_dir()) / f, dir / f);
        for (const auto& e : fs::directory_iterator(fs::path(data_dir()) / "configs"))
            fs::copy_file(e.path(), dir / "configs" / e.path().filename());
        nlohmann::json j;
        {
            std::ifstream in(dir / "tables.json");
            in >> j;
        }
        mutate(j);
        std::ofstream out(dir / "tables.json");
        out << j.dump(2);
    }
    ~MutatedDataset() { fs::remove_all(dir); }
};

nlohmann::json& entry_of(nlohmann::json& tables, long m, const std::string& no, size_t k) {
    for (auto& t : tables.at("tables"))
        if (t.at("m").get<long>() == m)
            for (auto& r : t.at("rows"))
                if (r.at("no").get<std::string>() == no) return r.at("entries").at(k);
    throw std::runtime_error("row not found");
}

}  // namespace

TEST_CASE("dataset loads and verifies clean") {
    Dataset d = load_dataset(data_dir());
    CHECK(d.table1.size() == 23);
    CHECK(d.tables.size() == 12);
    size_t entries = 0;
    for (const auto& t : d.tables)
        for (const auto& r : t.rows) entries += r.entries.size();
    CHECK(entries == 126);  // the "~110" rank/form obligations, one per (row, subgroup)
    CHECK(d.geometry.size() == 5);

    VerificationReport t1 = verify_table1(d);
    CHECK(t1.ok());
    CHECK(t1.rows.size() == 23);

    VerificationReport m42 = verify_mirrors(d, Int(42));
    CHECK(m42.ok());
    CHECK(m42.rows.size() == 1);

    VerificationReport geo = verify_geometry(d, "method1-12b");
    CHECK(geo.ok());
    CHECK(geo.rows.size() == 1);

    VerificationReport missing = verify_mirrors(d, Int(13));
    CHECK_FALSE(missing.ok());
}

TEST_CASE("report rendering is deterministic through JSON") {
    Dataset d = load_dataset(data_dir());
    VerificationReport r = merge({verify_table1(d), verify_geometry(d, "method3-37b")});
    std::string text = render_text(r);
    std::string json_text = render_json(r);
    VerificationReport r2 = report_from_json(json_text);
    CHECK(render_text(r2) == text);
    CHECK(render_json(r2) == json_text);
}

TEST_CASE("mutation sensitivity") {
    SUBCASE("rank off by one") {
        MutatedDataset mut([](nlohmann::json& j) {
            auto& e = entry_of(j, 9, "12b", 0);
            e["r"] = e["r"].get<int>() + 1;
        });
        Dataset d = load_dataset(mut.dir.string());
        VerificationReport rep = verify_mirrors(d, Int(9));
        CHECK_FALSE(rep.ok());
        bool localized = false;
        for (const auto& row : rep.rows)
            if (row.id == "m=9:12b" && !row.ok()) localized = true;
        CHECK(localized);
    }
    SUBCASE("flipped eps") {
        MutatedDataset mut([](nlohmann::json& j) {
            auto& e = entry_of(j, 9, "12b", 0);
            e["q"] = "w(3,1,-1)";
        });
        Dataset d = load_dataset(mut.dir.string());
        VerificationReport rep = verify_mirrors(d, Int(9));
        CHECK_FALSE(rep.ok());
        bool localized = false;
        for (const auto& row : rep.rows)
            if (row.id == "m=9:12b" && !row.ok()) localized = true;
        CHECK(localized);
    }
    SUBCASE("dangling dual reference") {
        MutatedDataset mut([](nlohmann::json& j) {
            auto& e = entry_of(j, 9, "12b", 0);
            e["dual"]["row"] = "25b";
        });
        Dataset d = load_dataset(mut.dir.string());
        VerificationReport rep = verify_mirrors(d, Int(9));
        CHECK_FALSE(rep.ok());
    }
    SUBCASE("geometry notices a mutated row rank") {
        MutatedDataset mut([](nlohmann::json& j) {
            auto& e = entry_of(j, 16, "37b", 1);
            e["r"] = 10;
        });
        Dataset d = load_dataset(mut.dir.string());
        VerificationReport rep = verify_geometry(d, "method3-37b");
        CHECK_FALSE(rep.ok());
    }
}
