/* Minimal consumer of the glis C ABI: parse a graph, decide both
 * questions, and verify the emitted certificate.
 *
 * Build (paths relative to the workspace root, after `cargo build -p glis-ffi`):
 *   cc demo.c -Icrates/glis-ffi/include target/debug/libglis_ffi.a -lpthread -ldl -lm
 */

#include <stdio.h>
#include <stdlib.h>

#include "glis.h"

static const char *GRAPH_TEXT =
    "p cvs 4 4 3\n"
    "v 0 1\n"
    "v 1 2\n"
    "v 2 3\n"
    "v 3 2\n"
    "e 0 1\n"
    "e 0 3\n"
    "e 1 2\n"
    "e 2 3\n";

static void check(GlisStatus status, const char *what) {
    if (status != GLIS_STATUS_OK) {
        fprintf(stderr, "%s: %s\n", what, glis_status_message(status));
        exit(1);
    }
}

int main(void) {
    GlisGraph *graph = NULL;
    check(glis_graph_parse(GRAPH_TEXT, &graph), "parse");

    uint32_t n = glis_graph_vertex_count(graph);
    uint32_t *layout = malloc(n * sizeof(uint32_t));
    uint32_t vs = 0;
    check(glis_exact_vs(graph, &vs, layout, n), "exact vs");
    printf("vs %u\n", vs);

    int answer = 0;
    GlisNoReason reason = GLIS_NO_REASON_NONE;
    check(glis_solve_cvs(graph, &answer, layout, n, &reason), "cvs");
    printf("cvs %s\n", answer ? "YES" : "NO");

    GlisModel *model = NULL;
    check(glis_solve_icg(graph, &answer, &model), "icg");
    printf("icg %s\n", answer ? "YES" : "NO");

    if (answer) {
        GlisVerifyReport report;
        check(glis_verify(graph, model, &report), "verify");
        printf("certificate %s\n", report.valid ? "VALID" : "INVALID");

        char *text = glis_model_serialize(model);
        printf("%s", text);
        glis_string_free(text);
        glis_model_free(model);
    }

    free(layout);
    glis_graph_free(graph);
    return 0;
}
