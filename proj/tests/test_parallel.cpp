#include <doctest.h>

#include <atomic>
#include <numeric>
#include <vector>

#include "tesler/alpha.hpp"
#include "tesler/json_io.hpp"
#include "tesler/parallel.hpp"

using namespace tesler;

TEST_CASE("parallel_for covers every index exactly once") {
    const std::size_t count = 500;
    std::vector<long> slots(count, -1);
    std::atomic<long> calls{0};
    parallel_for(count, 8, [&](std::size_t i) {
        slots[i] = static_cast<long>(i * i);
        calls.fetch_add(1);
    });
    CHECK(calls.load() == static_cast<long>(count));
    for (std::size_t i = 0; i < count; ++i) CHECK(slots[i] == static_cast<long>(i * i));
}

TEST_CASE("parallel_for with zero or one element stays inline") {
    std::vector<int> hits;
    parallel_for(0, 4, [&](std::size_t) { hits.push_back(0); });
    CHECK(hits.empty());
    parallel_for(1, 4, [&](std::size_t i) { hits.push_back(static_cast<int>(i)); });
    CHECK(hits == std::vector<int>{0});
}

TEST_CASE("reports are byte-identical for any job count") {
    const std::string serial = table_report_json(verify_tables(4, 1)).dump();
    const std::string threaded = table_report_json(verify_tables(4, 7)).dump();
    CHECK(serial == threaded);

    const std::string m1 = mcmullen_json(mcmullen_check(3, RatVec{1, 1, 1}, 1)).dump();
    const std::string m6 = mcmullen_json(mcmullen_check(3, RatVec{1, 1, 1}, 6)).dump();
    CHECK(m1 == m6);
}
