#include "job.hpp"

int main(int argc, char** argv)
{
    return nzhexmap::cli::cli_main(argc, argv);
}
