#########################################################
#                                                       #
#   Master Configuration File                           #
#                                                       #
#########################################################

# This is the master file of all settings that go into a configuration file, and all documentation on configuration
#   files is generated from this.

primary_config_file = [
    {
        "section": "Resource Guards",
        "description": "Ceilings on the exhaustive searches. A search that reaches a ceiling stops with a distinct " +
                       "resource-limit outcome; it is never reported as a property that holds.",
        "parameters": [{
            "parameter_title": "Maximum Enumerated Matchings",
            "description": "How many k-matchings a single enumeration may yield before it is aborted.",
            "parameter": "max_enumerated_matchings",
            "default_value": 10_000_000,
            "options": "any positive integer"
        }, {
            "parameter_title": "Maximum Configurations",
            "description": "How many (S, M, N) configurations a single extendability decision may examine.",
            "parameter": "max_configurations",
            "default_value": 100_000_000,
            "options": "any positive integer"
        }, {
            "parameter_title": "Parameter Vertex Limit",
            "description": "Largest order for which the binding number and toughness are computed; both are " +
                           "computed by subset search, so the running time doubles with every vertex.",
            "parameter": "parameter_vertex_limit",
            "default_value": 24,
            "options": "any positive integer"
        }, {
            "parameter_title": "Oracle Vertex Limit",
            "description": "Largest order for which the ensemble harness runs the exhaustive brute-force oracles " +
                           "(matching number, Tutte sets).",
            "parameter": "oracle_vertex_limit",
            "default_value": 10,
            "options": "any positive integer"
        }]
    }, {
        "section": "Extension Semantics",
        "description": "How the two matchings of an E(m,n) query may relate to each other.",
        "parameters": [{
            "parameter_title": "Strict Disjointness",
            "description": "If enabled, M and N of an E(m,n) query must together form a matching (vertex-disjoint); " +
                           "otherwise they only need to be edge-disjoint.",
            "parameter": "strict_disjoint",
            "default_value": False,
            "options": [True, False]
        }]
    }, {
        "section": "Ensemble / Output",
        "description": "Settings on how random-ensemble runs are executed and how their reports are written.",
        "parameters": [{
            "parameter_title": "Ensemble Workers",
            "description": "Number of worker processes for an ensemble run; results are merged in graph order, so " +
                           "the report does not depend on this value.",
            "parameter": "ensemble_workers",
            "default_value": 1,
            "options": "any positive integer"
        }, {
            "parameter_title": "JSON Indentation",
            "description": "Indentation of JSON reports written by the command line.",
            "parameter": "json_indent",
            "default_value": 2,
            "options": "any non-negative integer"
        }, {
            "parameter_title": "Counterexample Directory",
            "description": "Directory in which ensemble runs persist counterexample graphs and certificates.",
            "parameter": "counterexample_directory",
            "default_value": "counterexamples",
            "options": "any directory path"
        }]
    }
]
