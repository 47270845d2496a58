from .config_manager import settings_yml


class Settings:

    max_enumerated_matchings = int(settings_yml["max_enumerated_matchings"])
    max_configurations = int(settings_yml["max_configurations"])
    parameter_vertex_limit = int(settings_yml["parameter_vertex_limit"])
    oracle_vertex_limit = int(settings_yml["oracle_vertex_limit"])
    strict_disjoint = bool(settings_yml["strict_disjoint"])
    ensemble_workers = int(settings_yml["ensemble_workers"])
    json_indent = int(settings_yml["json_indent"])
    counterexample_directory = str(settings_yml["counterexample_directory"])
