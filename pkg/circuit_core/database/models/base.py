"""
Circuit Core - Database Base
SQLAlchemy declarative base shared by the results models
"""

from sqlalchemy.orm import declarative_base

Base = declarative_base()
