__all__ = [
    "config_manager",
    "primary_configuration",
    "settings"
]
