from .bundle_parser import BundleParser, load_graph_bundle
from .config_parser import ConfigFileParser, parse_config_file

__all__ = ["BundleParser", "load_graph_bundle", "ConfigFileParser", "parse_config_file"]
