#include "vstrata/cli.hpp"

int main(int argc, char** argv)
{
    return vstrata::cli::main_entry(argc, argv);
}
