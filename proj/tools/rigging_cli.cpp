#include "rigging/cli.hpp"

int main(int argc, char** argv) {
    return rigging::cli::run(argc, argv);
}
