#include "matchbench/synth.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "matchbench/rng.hpp"

namespace matchbench {

namespace {

const std::vector<std::string> kFirstNames = {
    "Anna",   "Bram",  "Carlos", "Daria",  "Elif",  "Femke",  "Giorgio", "Hana",  "Ivan",
    "Jolien", "Kwame", "Laila",  "Marek",  "Noor",  "Otis",   "Priya",   "Quinn", "Rosa",
    "Sven",   "Tessa", "Umar",   "Vera",   "Wouter", "Xenia", "Yusuf"};

const std::vector<std::string> kLastNames = {
    "Jansen",  "Okafor", "Petrov",  "Quispe",   "Rahman",   "Silveira",  "Tanaka", "Ulloa",
    "Visser",  "Weber",  "Xiong",   "Yilmaz",   "Zamora",   "Andersen", "Bakker", "Costa",
    "Dijkman", "Egede"};

const std::vector<std::string> kEmailFirsts = {
    "aiden", "beatriz", "casper", "delphine", "ethan",  "farah",  "gustav", "helena",
    "iker",  "jasmijn", "kenji",  "lucia",    "matteo", "nadia",  "oskar",  "paloma",
    "ruben", "sofie",   "tariq",  "ulrike",   "viggo",  "willem", "xander", "yara",
    "zoe",   "amara",   "boris",  "celine",   "dmitri", "esther"};

const std::vector<std::string> kEmailLasts = {
    "marques", "novak",   "ohara",   "palmer",  "quirke",  "rossi",  "schmidt",
    "torres",  "ueda",    "vance",   "wagner",  "xu",      "young",  "zeeman",
    "abara",   "bishop",  "cruz",    "duarte",  "engel",   "fuentes", "gomez",
    "hassan",  "ibarra",  "joshi",   "keller"};

const std::vector<std::string> kCities = {
    "Amsterdam", "Bogota",    "Casablanca", "Dresden",  "Edinburgh", "Fukuoka",  "Gdansk",
    "Helsinki",  "Izmir",     "Jakarta",    "Kampala",  "Lisbon",    "Montreal", "Nairobi",
    "Oslo",      "Porto",     "Quito",      "Riga",     "Seville",   "Tbilisi",  "Utrecht",
    "Valencia",  "Wroclaw",   "Xalapa",     "Yokohama", "Zagreb",    "Antwerp",  "Bergen",
    "Cordoba",   "Delft",     "Eindhoven",  "Florence", "Ghent",     "Haarlem",  "Innsbruck",
    "Jaipur",    "Krakow",    "Leiden",     "Malmo",    "Nantes"};

const std::vector<std::string> kCountries = {
    "Netherlands", "Portugal",  "Germany",   "Finland", "Turkey",  "Indonesia", "Uganda",
    "Canada",      "Kenya",     "Norway",    "Ecuador", "Latvia",  "Spain",     "Georgia",
    "Poland",      "Mexico",    "Japan",     "Croatia", "Belgium", "Argentina", "Austria",
    "Italy",       "India",     "Sweden",    "France"};

/// Shuffled 0..n-1, so pool entries land on random rows while each entry
/// keeps its near-equal share of them.
std::vector<std::size_t> row_permutation(std::size_t n, std::uint64_t seed) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Rng rng(seed);
  rng.shuffle(perm);
  return perm;
}

std::vector<CellValue> cells_from(const std::vector<std::string>& raws) {
  std::vector<CellValue> cells;
  cells.reserve(raws.size());
  for (const auto& raw : raws) cells.emplace_back(raw);
  return cells;
}

std::size_t pool_size(std::size_t rows, double fraction, std::size_t cap) {
  const auto scaled = static_cast<std::size_t>(std::llround(fraction * static_cast<double>(rows)));
  return std::clamp<std::size_t>(scaled, 2, cap);
}

}  // namespace

Table make_demo_table(std::size_t rows, std::uint64_t seed) {
  if (rows < 2) throw std::invalid_argument("demo table needs at least 2 rows");

  std::vector<Column> columns;
  std::size_t col_index = 0;
  const auto add_column = [&](const std::string& name,
                              const std::function<std::string(std::size_t)>& value_of) {
    const std::vector<std::size_t> perm =
        row_permutation(rows, Rng::mix(seed, 0xdead0 + col_index));
    std::vector<std::string> raws(rows);
    for (std::size_t i = 0; i < rows; ++i) raws[i] = value_of(perm[i]);
    columns.emplace_back("c" + std::to_string(col_index), name, cells_from(raws));
    ++col_index;
  };

  // Numeric pools use pairwise disjoint ranges; textual pools use pairwise
  // disjoint strings (and phone shares no characters with the other text).
  add_column("id", [&](std::size_t k) { return std::to_string(200001 + k); });

  const std::size_t name_pool = pool_size(rows, 0.45, kFirstNames.size() * kLastNames.size());
  add_column("name", [&](std::size_t k) {
    const std::size_t c = k % name_pool;
    return kFirstNames[c % kFirstNames.size()] + " " +
           kLastNames[(c / kFirstNames.size()) % kLastNames.size()];
  });

  const std::size_t email_pool = pool_size(rows, 0.75, kEmailFirsts.size() * kEmailLasts.size());
  add_column("email", [&](std::size_t k) {
    const std::size_t c = k % email_pool;
    return kEmailFirsts[c % kEmailFirsts.size()] + "." +
           kEmailLasts[(c / kEmailFirsts.size()) % kEmailLasts.size()] + "@example-post.net";
  });

  const std::size_t phone_pool = pool_size(rows, 0.5, 9999);
  add_column("phone", [&](std::size_t k) {
    std::string tail = std::to_string(5550000 + k % phone_pool);
    return "+31-20-" + tail;
  });

  add_column("city", [&](std::size_t k) { return kCities[k % kCities.size()]; });
  add_column("country", [&](std::size_t k) { return kCountries[k % kCountries.size()]; });

  add_column("age", [&](std::size_t k) { return std::to_string(18 + k % 53); });

  const std::size_t salary_pool = pool_size(rows, 0.32, 499);
  add_column("salary",
             [&](std::size_t k) { return std::to_string(30000 + 140 * (k % salary_pool)); });

  const std::size_t height_pool = pool_size(rows, 0.2, 499);
  add_column("height", [&](std::size_t k) {
    return format_double(static_cast<double>(1500 + k % height_pool) / 10.0);
  });

  const std::size_t score_pool = pool_size(rows, 0.13, 240);
  add_column("score", [&](std::size_t k) {
    return format_double(static_cast<double>(50000 + 201 * (k % score_pool)) / 100.0);
  });

  return Table("people", std::move(columns));
}

}  // namespace matchbench
