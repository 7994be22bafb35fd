from .Loader import Loader

class YamlLoader(Loader):
    """
    Loads settings from yaml files.
    """

    @classmethod
    def parse(cls, contents):
        """
        Return parsed python data-structure from the input content.
        """
        # third-party dependency
        import yaml

        return yaml.safe_load(
            contents
        )


# registering loader
Loader.register(
    'yaml',
    YamlLoader
)
Loader.register(
    'yml',
    YamlLoader
)
