#include <stdio.h>
#include <string.h>
#include "cubicq.h"

int main(void) {
    CqElement *x = NULL, *nf = NULL;
    CqSystem *sys = NULL;
    char *json = NULL;
    bool member = false;
    if (cq_element_parse("[2 1 2]", 3, &x) != CQ_STATUS_OK) return 1;
    if (cq_system_new(CQ_SYSTEM_KIND_POSITIVE, &sys) != CQ_STATUS_OK) return 2;
    if (cq_system_normal_form(sys, x, &nf) != CQ_STATUS_OK) return 3;
    if (cq_element_to_json(nf, &json) != CQ_STATUS_OK) return 4;
    if (strcmp(json, "{\"strands\":3,\"terms\":[{\"coeff\":\"1\",\"word\":[1,2,1]}]}") != 0) return 5;
    if (cq_ideal_member(x, &member) != CQ_STATUS_OK || member) return 6;
    if (cq_element_parse("[1", 3, &x) != CQ_STATUS_PARSE_ERROR || strlen(cq_last_error()) == 0) return 7;
    cq_string_free(json);
    cq_element_free(nf);
    cq_system_free(sys);
    puts("ok");
    return 0;
}
