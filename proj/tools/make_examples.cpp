#include "solidus/birational.hpp"

#include <fstream>
#include <iostream>

using namespace solidus;

// writes iota_prime_iota.json (the map iota' o iota) into the given directory
int main(int argc, char** argv)
{
    if (argc != 2) {
        std::cerr << "usage: solidus_examples <output-dir>\n";
        return 2;
    }
    RationalMap m = map_compose(involution("iota_prime"), involution("iota"));
    nlohmann::json j{{"degree", m.degree()}, {"components", nlohmann::json::array()}};
    for (const auto& c : m.components())
        j["components"].push_back(c.str());
    std::string path = std::string(argv[1]) + "/iota_prime_iota.json";
    std::ofstream out(path);
    if (!out) {
        std::cerr << "cannot write " << path << "\n";
        return 1;
    }
    out << j.dump(2) << "\n";
    std::cout << path << "\n";
    return 0;
}
