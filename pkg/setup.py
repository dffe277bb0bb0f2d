from setuptools import setup

with open("README.md", "r") as fh:
    long_description = fh.read()

setup(name="mvhodge",
      version="0.1.0",
      description="Exact Hodge integrals from the Mariño-Vafa formula",
      long_description=long_description,
      long_description_content_type="text/markdown",
      license="Apache-2.0",
      packages=[
          "mvhodge"
      ],
      install_requires=[
          "requests",
          "pandas",
          "python-dotenv",
      ],
      tests_require=[
          "pytest",
      ],
      entry_points={
          "console_scripts": [
              "mvhodge=mvhodge.cli:main",
          ],
      },
      zip_safe=False)
