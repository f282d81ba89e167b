/* The header must compile as C. */
#include <stdio.h>

#include "fpcensus.h"

int main(void) {
    fpc_graph_list* list = NULL;
    if (fpc_graphs_enumerate(2, &list) != FPC_OK) return 1;
    if (fpc_graphs_count(list) != 2) return 1;
    fpc_graphs_free(list);
    printf("fpcensus %s\n", fpc_version());
    return 0;
}
