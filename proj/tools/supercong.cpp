#include <supercong/cli.hpp>

#include <iostream>

int main(int argc, char** argv) {
    try {
        return supercong::run_cli(argc, argv, std::cout, std::cerr);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
